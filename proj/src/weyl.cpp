#include "bilc/weyl.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bilc {

Bidegree OperatorSymbol::bidegree() const {
  switch (kind) {
    case Kind::MulX:
      return {1, 0};
    case Kind::MulY:
      return {0, 1};
    case Kind::DX:
      return {-1, 0};
    case Kind::DY:
      return {0, -1};
  }
  return {};
}

int OperatorSymbol::variable(const RingSpec& ring) const {
  const bool x = kind == Kind::MulX || kind == Kind::DX;
  const int limit = x ? ring.n() : ring.m();
  if (index < 1 || index > limit)
    throw IndexError("operator " + to_string(*this) + " out of range for n=" + std::to_string(ring.n()) +
                     " m=" + std::to_string(ring.m()));
  return x ? index - 1 : ring.n() + index - 1;
}

std::string to_string(const OperatorSymbol& op) {
  switch (op.kind) {
    case OperatorSymbol::Kind::MulX:
      return "X" + std::to_string(op.index);
    case OperatorSymbol::Kind::MulY:
      return "Y" + std::to_string(op.index);
    case OperatorSymbol::Kind::DX:
      return "dX" + std::to_string(op.index);
    case OperatorSymbol::Kind::DY:
      return "dY" + std::to_string(op.index);
  }
  return "?";
}

ModuleElement ModuleElement::monomial(BoxModule box, Multidegree a, Rational coeff) {
  ModuleElement e(std::move(box));
  e.add_term(a, coeff);
  return e;
}

void ModuleElement::add_term(const Multidegree& a, const Rational& c) {
  if (!box_.contains_monomial(a)) throw DimensionError("monomial " + to_string(a) + " is not in the box");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  if (!(o.box_ == box_)) throw DimensionError("elements live in different boxes");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

ModuleElement ModuleElement::scaled(const Rational& c) const {
  ModuleElement out(box_);
  if (c == 0) return out;
  for (const auto& [a, x] : terms_) out.terms_.emplace(a, x * c);
  return out;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  ModuleElement out = a;
  out += b.scaled(-1);
  return out;
}

std::string to_string(const ModuleElement& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [a, c] : e.terms()) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*x^" + to_string(a);
  }
  return s;
}

ModuleElement apply_operator(const OperatorSymbol& op, const ModuleElement& e) {
  const int j = op.variable(e.box().ring());
  const SupportState state = e.box().state(j);
  ModuleElement out(e.box());
  for (const auto& [a, c] : e.terms()) {
    Multidegree b = a;
    Rational coeff = c;
    if (op.is_multiplication()) {
      b[j] = checked_add(b[j], 1);
      // X * X^-1 = 0 in the quotient of the Laurent ring by the polynomials
      if (state == SupportState::NegOnly && b[j] == 0) continue;
    } else {
      if (a[j] == 0) continue;
      coeff *= a[j];
      b[j] = checked_sub(b[j], 1);
    }
    out.add_term(b, coeff);
  }
  return out;
}

ModuleElement apply_euler(EulerSide side, const ModuleElement& e) {
  const RingSpec& ring = e.box().ring();
  const bool x = side == EulerSide::X;
  const int count = x ? ring.n() : ring.m();
  ModuleElement out(e.box());
  for (int i = 1; i <= count; ++i) {
    const auto d = x ? OperatorSymbol::dx(i) : OperatorSymbol::dy(i);
    const auto mul = x ? OperatorSymbol::mul_x(i) : OperatorSymbol::mul_y(i);
    out += apply_operator(mul, apply_operator(d, e));
  }
  return out;
}

int EulerReport::max_exponent_used() const {
  return exponent_histogram.empty() ? 0 : exponent_histogram.rbegin()->first;
}

namespace {

// All exponent vectors for the given states summing to target, with each
// exponent inside its state's range clipped to [lo, hi].
void enumerate_group(const std::vector<SupportState>& states, Degree target, Degree bound,
                     const std::function<void(const std::vector<Degree>&)>& emit) {
  const std::size_t k = states.size();
  if (k == 0) {
    if (target == 0) emit({});
    return;
  }
  auto range = [&](SupportState s) -> std::pair<Degree, Degree> {
    switch (s) {
      case SupportState::NonNeg:
        return {0, bound};
      case SupportState::NegOnly:
        return {-bound, -1};
      case SupportState::Laurent:
        return {-bound, bound};
    }
    return {0, -1};
  };
  std::vector<Degree> cur(k);
  std::function<void(std::size_t, Degree)> rec = [&](std::size_t i, Degree remaining) {
    if (i + 1 == k) {
      auto [lo, hi] = range(states[i]);
      if (remaining >= lo && remaining <= hi) {
        cur[i] = remaining;
        emit(cur);
      }
      return;
    }
    auto [lo, hi] = range(states[i]);
    for (Degree e = lo; e <= hi; ++e) {
      cur[i] = e;
      rec(i + 1, checked_sub(remaining, e));
    }
  };
  rec(0, target);
}

std::vector<std::vector<Degree>> group_monomials(const std::vector<SupportState>& states, Degree target,
                                                 std::optional<Degree> exponent_bound, std::size_t sample) {
  const ExtendedCount count = group_count(states, target);
  std::vector<std::vector<Degree>> out;
  if (count.is_zero()) return out;
  Degree bound;
  if (count.is_finite()) {
    // every exponent of a finite component is bounded by |target|
    bound = std::max<Degree>(target < 0 ? -target : target, 1);
  } else {
    if (!exponent_bound)
      throw UnsupportedWindowError("component at degree " + std::to_string(target) +
                                   " is infinite; an exponent bound is required");
    bound = *exponent_bound;
  }
  enumerate_group(states, target, bound, [&](const std::vector<Degree>& e) { out.push_back(e); });
  if (count.is_finite() || sample == 0 || out.size() <= sample) return out;
  std::vector<std::vector<Degree>> picked;
  for (std::size_t i = 0; i < sample; ++i) picked.push_back(out[i * out.size() / sample]);
  return picked;
}

}  // namespace

std::vector<Multidegree> basis_monomials(const BoxModule& b, Bidegree d, std::optional<Degree> exponent_bound,
                                         std::size_t infinite_sample) {
  if (box_dim(b, d).is_zero()) return {};
  const Bidegree raw = d + b.shift();
  const auto xs = group_monomials(group_states(b, true), raw.u, exponent_bound, infinite_sample);
  if (xs.empty()) return {};
  const auto ys = group_monomials(group_states(b, false), raw.v, exponent_bound, infinite_sample);
  std::vector<Multidegree> out;
  out.reserve(xs.size() * ys.size());
  for (const auto& x : xs)
    for (const auto& y : ys) {
      Multidegree a{x};
      a.exps.insert(a.exps.end(), y.begin(), y.end());
      out.push_back(std::move(a));
    }
  return out;
}

namespace {

// Smallest a <= max_power with (E - eigen)^a e = 0, or the residual.
std::optional<int> nilpotency(EulerSide side, const ModuleElement& e, Degree eigen, int max_power,
                              ModuleElement& residual) {
  ModuleElement cur = e;
  for (int a = 1; a <= max_power; ++a) {
    cur = apply_euler(side, cur) - cur.scaled(Rational(eigen));
    if (cur.is_zero()) return a;
  }
  residual = cur;
  return std::nullopt;
}

}  // namespace

EulerReport check_generalized_eulerian(const GradedModule& m, const Window& window, const EulerOptions& options) {
  window.validate();
  if (options.max_power < 1) throw RangeError("max_power must be positive");
  EulerReport report;
  report.window = window;
  for (std::size_t si = 0; si < m.summands().size(); ++si) {
    const BoxModule& box = m.summands()[si].box;
    for (const Bidegree d : window.points()) {
      if (box_dim(box, d).is_infinite()) {
        if (!options.exponent_bound)
          throw UnsupportedWindowError("infinite component at " + to_string(d) + " in summand " +
                                       format_states(box));
        report.truncated = true;
      }
      for (const auto& a : basis_monomials(box, d, options.exponent_bound, options.infinite_sample)) {
        ++report.monomials_checked;
        const auto e = ModuleElement::monomial(box, a);
        const Bidegree pos = box.position_of(a);
        int worst = 0;
        bool ok = true;
        for (const EulerSide side : {EulerSide::X, EulerSide::Y}) {
          ModuleElement residual(box);
          const auto power =
              nilpotency(side, e, side == EulerSide::X ? pos.u : pos.v, options.max_power, residual);
          if (!power) {
            report.failures.push_back({si, a, pos, side, residual});
            ok = false;
          } else {
            worst = std::max(worst, *power);
          }
        }
        if (ok) ++report.exponent_histogram[worst];
      }
    }
  }
  return report;
}

namespace {

// Basis monomials of the box at d whose exponent in var equals value.
ExtendedCount count_with_fixed(const BoxModule& b, int var, Degree value, Bidegree d) {
  if (!accepts(b.state(var), value)) return ExtendedCount(0);
  const RingSpec& ring = b.ring();
  const bool x = ring.is_x(var);
  auto own = group_states(b, x);
  own.erase(own.begin() + (x ? var : var - ring.n()));
  const Bidegree raw = d + b.shift();
  const Degree own_target = checked_sub(x ? raw.u : raw.v, value);
  const ExtendedCount a = group_count(own, own_target);
  if (a.is_zero()) return a;
  return a * group_count(group_states(b, !x), x ? raw.v : raw.u);
}

}  // namespace

KoszulDims koszul_homology_dims(const GradedModule& m, const OperatorSymbol& op, Bidegree d) {
  const int var = op.variable(m.ring());
  const Bidegree source = d - op.bidegree();
  KoszulDims out{ExtendedCount(0), ExtendedCount(0)};
  for (const auto& s : m.summands()) {
    const SupportState st = s.box.state(var);
    ExtendedCount killed(0), missed(0);
    if (op.is_multiplication()) {
      if (st == SupportState::NegOnly) killed = count_with_fixed(s.box, var, -1, source);
      if (st == SupportState::NonNeg) missed = count_with_fixed(s.box, var, 0, d);
    } else {
      if (st != SupportState::NegOnly) killed = count_with_fixed(s.box, var, 0, source);
      if (st != SupportState::NonNeg) missed = count_with_fixed(s.box, var, -1, d);
    }
    const ExtendedCount mult(s.multiplicity);
    out.h1 += mult * killed;
    out.h0 += mult * missed;
  }
  return out;
}

KoszulDims koszul_homology_by_matching(const GradedModule& m, const OperatorSymbol& op, Bidegree d) {
  op.variable(m.ring());
  const Bidegree source = d - op.bidegree();
  Integer h0 = 0, h1 = 0;
  for (const auto& s : m.summands()) {
    const auto src = basis_monomials(s.box, source);
    const auto tgt = basis_monomials(s.box, d);
    std::set<Multidegree> hit;
    Integer killed = 0;
    for (const auto& a : src) {
      const auto img = apply_operator(op, ModuleElement::monomial(s.box, a));
      if (img.is_zero()) {
        ++killed;
        continue;
      }
      for (const auto& [b, c] : img.terms()) hit.insert(b);
    }
    h1 += s.multiplicity * killed;
    h0 += s.multiplicity * (Integer(tgt.size()) - Integer(hit.size()));
  }
  return {ExtendedCount(h0), ExtendedCount(h1)};
}

KoszulDims koszul_homology_by_rank(const GradedModule& m, const OperatorSymbol& op, Bidegree d) {
  op.variable(m.ring());
  const Bidegree source = d - op.bidegree();
  Integer h0 = 0, h1 = 0;
  for (const auto& s : m.summands()) {
    const auto src = basis_monomials(s.box, source);
    const auto tgt = basis_monomials(s.box, d);
    RationalMatrix mat(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto img = apply_operator(op, ModuleElement::monomial(s.box, src[c]));
      for (const auto& [b, coeff] : img.terms()) {
        const auto it = std::ranges::find(tgt, b);
        if (it == tgt.end()) throw DimensionError("operator image left the target component");
        mat.at(static_cast<std::size_t>(it - tgt.begin()), c) = coeff;
      }
    }
    const std::size_t r = rank(mat);
    h1 += s.multiplicity * Integer(src.size() - r);
    h0 += s.multiplicity * Integer(tgt.size() - r);
  }
  return {ExtendedCount(h0), ExtendedCount(h1)};
}

BoxModule cyclic_quotient_box(const RingSpec& ring, SignPattern inverted) {
  return BoxModule::inverted_on(ring, inverted);
}

CyclicElement cyclic_quotient_act(const RingSpec& ring, SignPattern inverted, const OperatorSymbol& op,
                                  const CyclicElement& w) {
  const int j = op.variable(ring);
  CyclicElement out;
  auto add = [&](const Multidegree& k, const Rational& c) {
    if (c == 0) return;
    auto& slot = out[k];
    slot += c;
    if (slot == 0) out.erase(k);
  };
  for (const auto& [k, c] : w) {
    if (k.size() != static_cast<std::size_t>(ring.size())) throw DimensionError("normal form length mismatch");
    Multidegree next = k;
    // Off W u V the basis carries powers of the variable and d kills the
    // generator; on W u V it carries powers of d and the variable kills it.
    const bool raises = inverted.contains(j) != op.is_multiplication();
    if (raises) {
      next[j] = checked_add(next[j], 1);
      add(next, c);
    } else if (k[j] > 0) {
      next[j] = checked_sub(next[j], 1);
      const Rational f = inverted.contains(j) ? Rational(-k[j]) : Rational(k[j]);
      add(next, c * f);
    }
  }
  return out;
}

ModuleElement cyclic_quotient_image(const RingSpec& ring, SignPattern inverted, const CyclicElement& w) {
  ModuleElement out(cyclic_quotient_box(ring, inverted));
  for (const auto& [k, c] : w) {
    Multidegree a = k;
    Rational coeff = c;
    for (int j : inverted.members()) {
      if (k[j] < 0) throw DimensionError("normal form exponents are non-negative");
      Integer fact = 1;
      for (Degree t = 2; t <= k[j]; ++t) fact *= t;
      coeff *= (k[j] % 2 == 0 ? Rational(fact) : Rational(-fact));
      a[j] = checked_sub(-1, k[j]);
    }
    out.add_term(a, coeff);
  }
  return out;
}

}  // namespace bilc
