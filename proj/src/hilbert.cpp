#include "bilc/hilbert.hpp"

#include <algorithm>
#include <variant>

namespace bilc {

namespace {

struct GroupShape {
  int nonneg = 0;
  int negonly = 0;
  int laurent = 0;
};

GroupShape shape(const std::vector<SupportState>& states) {
  GroupShape g;
  for (auto s : states) {
    if (s == SupportState::NonNeg) ++g.nonneg;
    if (s == SupportState::NegOnly) ++g.negonly;
    if (s == SupportState::Laurent) ++g.laurent;
  }
  return g;
}

// 0 = NE, 1 = NW*, 2 = S*W*, 3 = S*E, 4 = anything else.
int quadrant_rank(const BoxModule& b) {
  const auto x = shape(group_states(b, true));
  const auto y = shape(group_states(b, false));
  const bool xe = x.negonly == 0 && x.laurent == 0, xw = x.nonneg == 0 && x.laurent == 0;
  const bool yn = y.negonly == 0 && y.laurent == 0, ys = y.nonneg == 0 && y.laurent == 0;
  if (xe && yn) return 0;
  if (xw && yn) return 1;
  if (xw && ys) return 2;
  if (xe && ys) return 3;
  return 4;
}

std::string power(const std::string& var, Degree e) { return var + "^" + std::to_string(e); }

std::string denominator(const BoxModule& b) {
  std::vector<std::string> parts;
  for (const bool x : {true, false}) {
    const auto g = shape(group_states(b, x));
    const std::string t = x ? "t1" : "t2";
    if (g.nonneg > 0) parts.push_back("(1-" + t + ")^" + std::to_string(g.nonneg));
    if (g.negonly > 0) parts.push_back("(1-" + t + "^-1)^" + std::to_string(g.negonly));
  }
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return "(" + s + ")";
}

// Coefficient text with monomial factors; a unit coefficient is dropped
// when a monomial factor is present.
std::string product_text(const Integer& coef, Degree e1, Degree e2) {
  std::vector<std::string> mono;
  if (e1 != 0) mono.push_back(power("t1", e1));
  if (e2 != 0) mono.push_back(power("t2", e2));
  std::string s;
  if (mono.empty()) return coef.str();
  if (coef == -1)
    s = "-";
  else if (coef != 1)
    s = coef.str() + " * ";
  for (std::size_t i = 0; i < mono.size(); ++i) s += (i ? " * " : "") + mono[i];
  return s;
}

Rational rpow(const Rational& t, Degree e) {
  Rational r = 1;
  const Rational base = e < 0 ? 1 / t : t;
  for (Degree i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

}  // namespace

HilbertSeries hilbert_series(const GradedModule& m) {
  HilbertSeries s{m.ring(), {}};
  for (const auto& sm : m.summands()) {
    if (sm.box.has_laurent())
      throw NoRationalSeriesError("summand " + format_states(sm.box) + " has a Laurent state");
    s.terms.push_back({sm.multiplicity, sm.box});
  }
  std::ranges::stable_sort(s.terms, {}, [](const SeriesTerm& t) { return quadrant_rank(t.box); });
  return s;
}

bool verify_terai_hypothesis(const GradedModule& m) {
  const Degree n = m.ring().n(), mm = m.ring().m();
  // a box support is the product of two nonempty ranges, so it meets a
  // strip iff the matching range meets the open interval
  auto meets = [](const DegreeRange& r, Degree lo, Degree hi) {
    return lo <= hi && (!r.hi || *r.hi >= lo) && (!r.lo || *r.lo <= hi);
  };
  for (const auto& sm : m.summands()) {
    const auto [xr, yr] = box_support(sm.box);
    if (meets(xr, -n + 1, -1) || meets(yr, -mm + 1, -1)) return false;
  }
  return true;
}

std::array<ExtendedCount, 4> corner_dims(const GradedModule& m) {
  const Degree n = m.ring().n(), mm = m.ring().m();
  return {module_dim(m, {0, 0}), module_dim(m, {-n, 0}), module_dim(m, {-n, -mm}), module_dim(m, {0, -mm})};
}

std::string render_quadrant_form(const HilbertSeries& s) {
  if (s.terms.empty()) return "0";
  std::string out;
  for (const auto& t : s.terms) {
    const auto x = shape(group_states(t.box, true));
    const auto y = shape(group_states(t.box, false));
    const Degree e1 = checked_sub(-x.negonly, t.box.shift().u);
    const Degree e2 = checked_sub(-y.negonly, t.box.shift().v);
    if (!out.empty()) out += " + ";
    out += product_text(t.multiplicity, e1, e2) + " / " + denominator(t.box);
  }
  return out;
}

std::optional<std::string> render_four_corner_form(const GradedModule& m) {
  if (m.is_zero() || !verify_terai_hypothesis(m)) return std::nullopt;
  for (const auto& sm : m.summands())
    if (sm.box.shift() != Bidegree{} || quadrant_rank(sm.box) == 4) return std::nullopt;
  const RingSpec& ring = m.ring();
  const auto d = corner_dims(m);
  using S = SupportState;
  auto box = [&](S x, S y) {
    std::vector<S> st(ring.n(), x);
    st.insert(st.end(), ring.m(), y);
    return BoxModule(ring, std::move(st));
  };
  const BoxModule corners[4] = {box(S::NonNeg, S::NonNeg), box(S::NegOnly, S::NonNeg), box(S::NegOnly, S::NegOnly),
                                box(S::NonNeg, S::NegOnly)};
  HilbertSeries s{ring, {}};
  for (int i = 0; i < 4; ++i)
    if (!d[i].is_zero()) s.terms.push_back({d[i].value(), corners[i]});
  return render_quadrant_form(s);
}

std::map<std::pair<Degree, Degree>, Integer> normalized_numerator(const HilbertSeries& s) {
  std::map<std::pair<Degree, Degree>, Integer> num;
  for (const auto& t : s.terms) {
    int negs = 0;
    for (auto st : t.box.states()) negs += st == SupportState::NegOnly;
    const std::pair<Degree, Degree> key{checked_sub(0, t.box.shift().u), checked_sub(0, t.box.shift().v)};
    num[key] += negs % 2 == 0 ? t.multiplicity : Integer(-t.multiplicity);
  }
  std::erase_if(num, [](const auto& kv) { return kv.second == 0; });
  return num;
}

std::string render_normalized_form(const HilbertSeries& s) {
  const auto num = normalized_numerator(s);
  if (num.empty()) return "0";
  std::string top;
  bool first = true;
  for (const auto& [e, c] : num) {
    if (first) {
      top = product_text(c, e.first, e.second);
    } else {
      top += c < 0 ? " - " : " + ";
      top += product_text(c < 0 ? Integer(-c) : c, e.first, e.second);
    }
    first = false;
  }
  if (num.size() > 1) top = "(" + top + ")";
  return top + " / ((1-t1)^" + std::to_string(s.ring.n()) + " (1-t2)^" + std::to_string(s.ring.m()) + ")";
}

RenderedSeries render_series(const GradedModule& m, bool normalize) {
  const HilbertSeries s = hilbert_series(m);
  if (normalize) return {render_normalized_form(s), "rational-function"};
  if (auto four = render_four_corner_form(m)) return {*four, "quadrant-series"};
  return {render_quadrant_form(s), "quadrant-series"};
}

Rational evaluate_quadrant_form(const HilbertSeries& s, const Rational& t1, const Rational& t2) {
  if (t1 == 0 || t1 == 1 || t2 == 0 || t2 == 1) throw RangeError("evaluation point must avoid 0 and 1");
  Rational total = 0;
  for (const auto& t : s.terms) {
    Rational v = Rational(t.multiplicity) * rpow(t1, -t.box.shift().u) * rpow(t2, -t.box.shift().v);
    for (int j = 0; j < s.ring.size(); ++j) {
      const Rational& x = s.ring.is_x(j) ? t1 : t2;
      v *= t.box.state(j) == SupportState::NonNeg ? Rational(1 / (1 - x)) : Rational((1 / x) / (1 - 1 / x));
    }
    total += v;
  }
  return total;
}

Rational evaluate_normalized_form(const HilbertSeries& s, const Rational& t1, const Rational& t2) {
  if (t1 == 0 || t1 == 1 || t2 == 0 || t2 == 1) throw RangeError("evaluation point must avoid 0 and 1");
  Rational num = 0;
  for (const auto& [e, c] : normalized_numerator(s)) num += Rational(c) * rpow(t1, e.first) * rpow(t2, e.second);
  return num / (rpow(1 - t1, s.ring.n()) * rpow(1 - t2, s.ring.m()));
}

namespace {

// Coefficient of t^target in the product of the one-variable series of a
// group, by repeated convolution.
ExtendedCount convolved_coefficient(const std::vector<SupportState>& states, Degree target) {
  const auto g = shape(states);
  if (g.laurent > 0) throw NoRationalSeriesError("Laurent states have no rational series");
  if (g.nonneg > 0 && g.negonly > 0) return ExtendedCount::infinite();
  if (states.empty()) return ExtendedCount(target == 0 ? 1 : 0);
  // x^-1/(1-x^-1) = sum_{e<=-1} x^e; substituting e = -1-f maps l such
  // factors at target T to l copies of sum_{f>=0} x^f at -T-l.
  const int k = g.nonneg > 0 ? g.nonneg : g.negonly;
  const Degree t = g.nonneg > 0 ? target : checked_sub(checked_sub(0, target), g.negonly);
  if (t < 0) return ExtendedCount(0);
  std::vector<Integer> coeff(static_cast<std::size_t>(t) + 1, 1);
  for (int var = 1; var < k; ++var) {
    std::vector<Integer> next(coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i)
      for (std::size_t e = 0; e <= i; ++e) next[i] += coeff[i - e];
    coeff = std::move(next);
  }
  return ExtendedCount(coeff.back());
}

}  // namespace

std::map<Bidegree, ExtendedCount> eval_series_window(const HilbertSeries& s, const Window& w) {
  std::map<Bidegree, ExtendedCount> table;
  for (const Bidegree d : w.points()) {
    ExtendedCount total(0);
    for (const auto& t : s.terms) {
      const Bidegree raw = d + t.box.shift();
      const auto cx = convolved_coefficient(group_states(t.box, true), raw.u);
      if (cx.is_zero()) continue;
      total += ExtendedCount(t.multiplicity) * cx * convolved_coefficient(group_states(t.box, false), raw.v);
    }
    table.emplace(d, total);
  }
  return table;
}

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::NE:
      return "NE";
    case Quadrant::NWstar:
      return "NW*";
    case Quadrant::SstarWstar:
      return "S*W*";
    case Quadrant::SstarE:
      return "S*E";
  }
  return "?";
}

Integer QuadrantPolynomial::evaluate(Bidegree d) const {
  Integer total = 0;
  for (const auto& t : terms)
    total += t.coef * binomial(Integer(t.sx) * d.u + t.alpha, t.j) * binomial(Integer(t.sy) * d.v + t.beta, t.k);
  return total;
}

namespace {

std::string binomial_text(int sign, const std::string& var, const Integer& offset, unsigned k) {
  std::string s = "C(" + std::string(sign < 0 ? "-" : "") + var;
  if (offset != 0) s += (offset > 0 ? "+" : "") + offset.str();
  return s + "," + std::to_string(k) + ")";
}

struct Zero {};
struct Infinite {};
struct Factor {
  int sign;
  Integer offset;
  unsigned k;
};
using GroupFactor = std::variant<Zero, Infinite, Factor>;

GroupFactor quadrant_factor(const std::vector<SupportState>& states, bool positive_side, Degree shift) {
  const auto g = shape(states);
  const int size = static_cast<int>(states.size());
  if (g.laurent == 1 && size == 1) return Factor{1, 0, 0};
  if (g.laurent > 0 || (g.nonneg > 0 && g.negonly > 0)) return Infinite{};
  if (g.negonly == 0) {
    if (!positive_side) return Zero{};
    return Factor{1, Integer(shift) + size - 1, static_cast<unsigned>(size - 1)};
  }
  if (positive_side) return Zero{};
  return Factor{-1, Integer(-shift) - 1, static_cast<unsigned>(size - 1)};
}

}  // namespace

std::string to_string(const QuadrantPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms) {
    if (!s.empty()) s += " + ";
    s += t.coef.str() + "*" + binomial_text(t.sx, "u", t.alpha, t.j) + "*" + binomial_text(t.sy, "v", t.beta, t.k);
  }
  return s;
}

QuadrantPolynomial dimension_polynomial(const GradedModule& m, Quadrant q) {
  const bool east = q == Quadrant::NE || q == Quadrant::SstarE;
  const bool north = q == Quadrant::NE || q == Quadrant::NWstar;
  QuadrantPolynomial p;
  p.quadrant = q;
  for (const auto& sm : m.summands()) {
    const auto fx = quadrant_factor(group_states(sm.box, true), east, sm.box.shift().u);
    const auto fy = quadrant_factor(group_states(sm.box, false), north, sm.box.shift().v);
    if (std::holds_alternative<Zero>(fx) || std::holds_alternative<Zero>(fy)) continue;
    if (std::holds_alternative<Infinite>(fx) || std::holds_alternative<Infinite>(fy))
      throw InfiniteDimensionError("summand " + format_states(sm.box) + " has infinite dimensions on " + to_string(q));
    const auto& x = std::get<Factor>(fx);
    const auto& y = std::get<Factor>(fy);
    const BinomialTerm term{sm.multiplicity, x.sign, x.offset, x.k, y.sign, y.offset, y.k};
    auto same = std::ranges::find_if(p.terms, [&](const BinomialTerm& t) {
      return t.sx == term.sx && t.alpha == term.alpha && t.j == term.j && t.sy == term.sy && t.beta == term.beta &&
             t.k == term.k;
    });
    if (same == p.terms.end())
      p.terms.push_back(term);
    else
      same->coef += term.coef;
  }
  return p;
}

bool deep_in_quadrant(const RingSpec& ring, Quadrant q, Bidegree d) {
  const Degree depth = std::max(ring.n(), ring.m());
  const bool east = q == Quadrant::NE || q == Quadrant::SstarE;
  const bool north = q == Quadrant::NE || q == Quadrant::NWstar;
  const bool u_ok = east ? d.u >= depth : d.u <= -ring.n() - depth;
  const bool v_ok = north ? d.v >= depth : d.v <= -ring.m() - depth;
  return u_ok && v_ok;
}

}  // namespace bilc
