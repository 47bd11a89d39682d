#ifndef BILC_CORE_HPP
#define BILC_CORE_HPP

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

/// Shared foundation: the bigraded polynomial ring, its gradings, and exact
/// rational linear algebra.
namespace bilc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Exponents and degrees. All arithmetic on them goes through the checked
/// helpers below, so overflow raises instead of wrapping.
using Degree = std::int64_t;

// Error hierarchy. Every failure the library reports derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class DimensionError : public Error {
 public:
  using Error::Error;
};
class IndexError : public Error {
 public:
  using Error::Error;
};
class RangeError : public Error {
 public:
  using Error::Error;
};
class OverflowError : public Error {
 public:
  using Error::Error;
};
class UnsupportedWindowError : public Error {
 public:
  using Error::Error;
};
class WindowError : public Error {
 public:
  using Error::Error;
};
class InvalidCornerError : public Error {
 public:
  using Error::Error;
};
class LookupError : public Error {
 public:
  using Error::Error;
};
class NoRationalSeriesError : public Error {
 public:
  using Error::Error;
};
class InfiniteDimensionError : public Error {
 public:
  using Error::Error;
};

Degree checked_add(Degree a, Degree b);
Degree checked_sub(Degree a, Degree b);
Degree checked_mul(Degree a, Degree b);

/// R = Q[X1..Xn, Y1..Ym] with bideg Xi = (1,0) and bideg Yj = (0,1).
/// Variable indices are 0-based internally: 0..n-1 are X, n..n+m-1 are Y.
class RingSpec {
 public:
  static constexpr int kMaxVariables = 62;

  RingSpec(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  int size() const { return n_ + m_; }
  bool is_x(int var) const { return var < n_; }
  /// Canonical name: X1..Xn, Y1..Ym.
  std::string var_name(int var) const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  int n_;
  int m_;
};

struct Bidegree {
  Degree u = 0;
  Degree v = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

Bidegree operator+(Bidegree a, Bidegree b);
Bidegree operator-(Bidegree a, Bidegree b);
Bidegree operator-(Bidegree a);
/// Componentwise partial order: (u1,v1) <= (u2,v2) iff u1 <= u2 and v1 <= v2.
bool componentwise_leq(Bidegree a, Bidegree b);
std::string to_string(Bidegree d);

/// Fine Z^{n+m} degree; entries 0..n-1 belong to X, the rest to Y.
struct Multidegree {
  std::vector<Degree> exps;

  std::size_t size() const { return exps.size(); }
  Degree operator[](std::size_t i) const { return exps[i]; }
  Degree& operator[](std::size_t i) { return exps[i]; }

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;
};

Multidegree operator+(const Multidegree& a, const Multidegree& b);
std::string to_string(const Multidegree& a);

/// Coarsens a fine degree to its bidegree. Throws DimensionError if the
/// length does not match the ring.
Bidegree total_bidegree(const RingSpec& ring, const Multidegree& a);

/// A subset of variable indices, stored as a bit mask.
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(std::uint64_t bits) : bits_(bits) {}

  static SignPattern of(std::initializer_list<int> vars);

  std::uint64_t bits() const { return bits_; }
  bool contains(int var) const { return (bits_ >> var) & 1U; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool subset_of(SignPattern other) const { return (bits_ & ~other.bits_) == 0; }
  /// Sorted 0-based variable indices.
  std::vector<int> members() const;

  friend bool operator==(SignPattern, SignPattern) = default;
  friend auto operator<=>(SignPattern, SignPattern) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Coordinates where a is negative.
SignPattern neg_support(const Multidegree& a);
/// Renders as {X1,Y2}; the empty set as {}.
std::string to_string(const RingSpec& ring, SignPattern f);

/// Dense matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Rank over Q by Gaussian elimination with exact rational pivots.
std::size_t rank(const RationalMatrix& m);

/// Rank by Bareiss fraction-free elimination. Entries must be integral;
/// throws DimensionError otherwise.
std::size_t rank_fraction_free(const RationalMatrix& m);

/// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Generalized binomial coefficient C(x, k) = x (x-1) ... (x-k+1) / k! for
/// any integer x and k >= 0.
Integer binomial(const Integer& x, unsigned k);

/// Axis-aligned rectangle of bidegrees [umin,umax] x [vmin,vmax].
struct Window {
  Degree umin = 0;
  Degree umax = 0;
  Degree vmin = 0;
  Degree vmax = 0;

  /// Throws WindowError unless umin <= umax and vmin <= vmax.
  void validate() const;
  bool contains(Bidegree d) const;
  /// Row-major order: u outer, v inner.
  std::vector<Bidegree> points() const;

  friend bool operator==(const Window&, const Window&) = default;
};

/// [-(n+4), n+4] x [-(m+4), m+4].
Window default_window(const RingSpec& ring);
/// Square window [-r, r]^2.
Window square_window(Degree r);

}  // namespace bilc

#endif  // BILC_CORE_HPP
