#include "bilc/core.hpp"

#include <bit>
#include <sstream>
#include <utility>

namespace bilc {

Degree checked_add(Degree a, Degree b) {
  Degree r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("degree overflow in addition");
  return r;
}

Degree checked_sub(Degree a, Degree b) {
  Degree r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("degree overflow in subtraction");
  return r;
}

Degree checked_mul(Degree a, Degree b) {
  Degree r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("degree overflow in multiplication");
  return r;
}

RingSpec::RingSpec(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw DimensionError("ring needs n >= 1 and m >= 1");
  if (n + m > kMaxVariables) throw DimensionError("too many variables");
}

std::string RingSpec::var_name(int var) const {
  if (var < 0 || var >= size()) throw IndexError("variable index out of range");
  return is_x(var) ? "X" + std::to_string(var + 1) : "Y" + std::to_string(var - n_ + 1);
}

Bidegree operator+(Bidegree a, Bidegree b) { return {checked_add(a.u, b.u), checked_add(a.v, b.v)}; }
Bidegree operator-(Bidegree a, Bidegree b) { return {checked_sub(a.u, b.u), checked_sub(a.v, b.v)}; }
Bidegree operator-(Bidegree a) { return {checked_sub(0, a.u), checked_sub(0, a.v)}; }

bool componentwise_leq(Bidegree a, Bidegree b) { return a.u <= b.u && a.v <= b.v; }

std::string to_string(Bidegree d) {
  return "(" + std::to_string(d.u) + "," + std::to_string(d.v) + ")";
}

Multidegree operator+(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size()) throw DimensionError("multidegree length mismatch");
  Multidegree r{a.exps};
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(r[i], b[i]);
  return r;
}

std::string to_string(const Multidegree& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

Bidegree total_bidegree(const RingSpec& ring, const Multidegree& a) {
  if (a.size() != static_cast<std::size_t>(ring.size()))
    throw DimensionError("multidegree has length " + std::to_string(a.size()) + ", ring has " +
                         std::to_string(ring.size()) + " variables");
  Bidegree d;
  for (int j = 0; j < ring.size(); ++j) {
    if (ring.is_x(j))
      d.u = checked_add(d.u, a[j]);
    else
      d.v = checked_add(d.v, a[j]);
  }
  return d;
}

SignPattern SignPattern::of(std::initializer_list<int> vars) {
  std::uint64_t bits = 0;
  for (int v : vars) bits |= std::uint64_t{1} << v;
  return SignPattern(bits);
}

int SignPattern::size() const { return std::popcount(bits_); }

std::vector<int> SignPattern::members() const {
  std::vector<int> out;
  for (int j = 0; j < 64; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

SignPattern neg_support(const Multidegree& a) {
  if (a.size() > 64) throw DimensionError("multidegree too long for a sign pattern");
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] < 0) bits |= std::uint64_t{1} << j;
  return SignPattern(bits);
}

std::string to_string(const RingSpec& ring, SignPattern f) {
  std::string s = "{";
  bool first = true;
  for (int j : f.members()) {
    if (!first) s += ",";
    s += ring.var_name(j);
    first = false;
  }
  return s + "}";
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  RationalMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a.at(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    const Rational inv = 1 / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(r, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix a = m;
  return row_reduce(a).size();
}

std::size_t rank_fraction_free(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& x = m.at(i, j);
      if (denominator(x) != 1) throw DimensionError("fraction-free rank needs integer entries");
      a[i * cols + j] = numerator(x);
    }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * cols + j]; };

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t p = r;
    while (p < rows && at(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j)
        at(i, j) = (at(r, col) * at(i, j) - at(i, col) * at(r, j)) / prev;
      at(i, col) = 0;
    }
    prev = at(r, col);
    ++r;
  }
  return r;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  RationalMatrix a = m;
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a.at(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

Integer binomial(const Integer& x, unsigned k) {
  Integer num = 1;
  Integer den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= x - i;
    den *= i + 1;
  }
  return num / den;
}

void Window::validate() const {
  if (umin > umax || vmin > vmax) throw WindowError("window bounds are not ordered");
}

bool Window::contains(Bidegree d) const {
  return umin <= d.u && d.u <= umax && vmin <= d.v && d.v <= vmax;
}

std::vector<Bidegree> Window::points() const {
  validate();
  std::vector<Bidegree> pts;
  for (Degree u = umin; u <= umax; ++u)
    for (Degree v = vmin; v <= vmax; ++v) pts.push_back({u, v});
  return pts;
}

Window default_window(const RingSpec& ring) {
  return {-(ring.n() + 4), ring.n() + 4, -(ring.m() + 4), ring.m() + 4};
}

Window square_window(Degree r) { return {-r, r, -r, r}; }

}  // namespace bilc
