#include "bilc/boxmod.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace bilc {

bool accepts(SupportState s, Degree e) {
  switch (s) {
    case SupportState::NonNeg:
      return e >= 0;
    case SupportState::NegOnly:
      return e <= -1;
    case SupportState::Laurent:
      return true;
  }
  return false;
}

std::string_view state_token(SupportState s) {
  switch (s) {
    case SupportState::NonNeg:
      return "pos";
    case SupportState::NegOnly:
      return "neg";
    case SupportState::Laurent:
      return "lau";
  }
  return "?";
}

SupportState parse_state_token(std::string_view token) {
  if (token == "pos") return SupportState::NonNeg;
  if (token == "neg") return SupportState::NegOnly;
  if (token == "lau") return SupportState::Laurent;
  throw std::invalid_argument("unknown support state '" + std::string(token) + "'");
}

ExtendedCount::ExtendedCount(Integer value) : value_(std::move(value)) {
  if (value_ < 0) throw RangeError("counts are non-negative");
}

ExtendedCount ExtendedCount::infinite() {
  ExtendedCount c;
  c.infinite_ = true;
  return c;
}

const Integer& ExtendedCount::value() const {
  if (infinite_) throw InfiniteDimensionError("count is infinite");
  return value_;
}

ExtendedCount& ExtendedCount::operator+=(const ExtendedCount& o) {
  if (infinite_ || o.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += o.value_;
  }
  return *this;
}

ExtendedCount operator*(const ExtendedCount& a, const ExtendedCount& b) {
  if (a.is_zero() || b.is_zero()) return ExtendedCount(0);
  if (a.infinite_ || b.infinite_) return ExtendedCount::infinite();
  return ExtendedCount(a.value_ * b.value_);
}

bool operator==(const ExtendedCount& a, const ExtendedCount& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::string to_string(const ExtendedCount& c) {
  return c.is_infinite() ? "inf" : c.value().str();
}

BoxModule::BoxModule(RingSpec ring, std::vector<SupportState> states, Bidegree shift)
    : ring_(ring), states_(std::move(states)), shift_(shift) {
  if (states_.size() != static_cast<std::size_t>(ring_.size()))
    throw DimensionError("box needs one state per variable");
}

BoxModule BoxModule::all(RingSpec ring, SupportState s) {
  return BoxModule(ring, std::vector<SupportState>(ring.size(), s));
}

BoxModule BoxModule::inverted_on(RingSpec ring, SignPattern f) {
  std::vector<SupportState> states(ring.size(), SupportState::NonNeg);
  for (int j : f.members()) {
    if (j >= ring.size()) throw IndexError("sign pattern outside the ring");
    states[j] = SupportState::NegOnly;
  }
  return BoxModule(ring, std::move(states));
}

bool BoxModule::has_laurent() const {
  return std::ranges::find(states_, SupportState::Laurent) != states_.end();
}

bool BoxModule::contains_monomial(const Multidegree& a) const {
  if (a.size() != states_.size()) throw DimensionError("monomial length mismatch");
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!accepts(states_[j], a[j])) return false;
  return true;
}

Bidegree BoxModule::position_of(const Multidegree& a) const {
  return total_bidegree(ring_, a) - shift_;
}

BoxModule BoxModule::with_shift(Bidegree s) const { return BoxModule(ring_, states_, s); }

BoxModule BoxModule::with_states(std::vector<SupportState> s) const {
  return BoxModule(ring_, std::move(s), shift_);
}

std::vector<SupportState> group_states(const BoxModule& b, bool x_group) {
  const auto& st = b.states();
  const int n = b.ring().n();
  return x_group ? std::vector<SupportState>(st.begin(), st.begin() + n)
                 : std::vector<SupportState>(st.begin() + n, st.end());
}

namespace {

struct GroupShape {
  long nonneg = 0;
  long negonly = 0;
  long laurent = 0;
  long size() const { return nonneg + negonly + laurent; }
};

GroupShape shape_of(const std::vector<SupportState>& states) {
  GroupShape g;
  for (auto s : states) {
    if (s == SupportState::NonNeg) ++g.nonneg;
    if (s == SupportState::NegOnly) ++g.negonly;
    if (s == SupportState::Laurent) ++g.laurent;
  }
  return g;
}

}  // namespace

ExtendedCount group_count(const std::vector<SupportState>& states, Degree target) {
  const GroupShape g = shape_of(states);
  if (g.size() == 0) return ExtendedCount(target == 0 ? 1 : 0);
  if (g.laurent > 0) return g.size() == 1 ? ExtendedCount(1) : ExtendedCount::infinite();
  if (g.nonneg > 0 && g.negonly > 0) return ExtendedCount::infinite();
  if (g.negonly == 0) {
    // compositions of target into nonneg parts
    if (target < 0) return ExtendedCount(0);
    return ExtendedCount(binomial(Integer(target) + g.nonneg - 1, g.nonneg - 1));
  }
  // target = -(l + t) with t >= 0 spread over l parts
  if (target > -g.negonly) return ExtendedCount(0);
  return ExtendedCount(binomial(-Integer(target) - 1, g.negonly - 1));
}

DegreeRange group_support(const std::vector<SupportState>& states) {
  const GroupShape g = shape_of(states);
  if (g.size() == 0) return {0, 0};
  if (g.laurent > 0 || (g.nonneg > 0 && g.negonly > 0)) return {};
  if (g.negonly == 0) return {0, std::nullopt};
  return {std::nullopt, -g.negonly};
}

ExtendedCount box_dim(const BoxModule& b, Bidegree d) {
  const Bidegree raw = d + b.shift();
  const auto x = group_count(group_states(b, true), raw.u);
  if (x.is_zero()) return x;
  return x * group_count(group_states(b, false), raw.v);
}

namespace {

DegreeRange translate(DegreeRange r, Degree by) {
  if (r.lo) r.lo = checked_add(*r.lo, by);
  if (r.hi) r.hi = checked_add(*r.hi, by);
  return r;
}

}  // namespace

std::pair<DegreeRange, DegreeRange> box_support(const BoxModule& b) {
  return {translate(group_support(group_states(b, true)), -b.shift().u),
          translate(group_support(group_states(b, false)), -b.shift().v)};
}

GradedModule::GradedModule(RingSpec ring, std::vector<Summand> summands)
    : ring_(ring), summands_(std::move(summands)) {
  for (const auto& s : summands_) {
    if (!(s.box.ring() == ring_)) throw DimensionError("summand over a different ring");
    if (s.multiplicity < 1) throw RangeError("multiplicities are positive");
  }
}

bool GradedModule::has_laurent() const {
  return std::ranges::any_of(summands_, [](const Summand& s) { return s.box.has_laurent(); });
}

void GradedModule::add(BoxModule box, Integer multiplicity) {
  if (!(box.ring() == ring_)) throw DimensionError("summand over a different ring");
  if (multiplicity < 1) throw RangeError("multiplicities are positive");
  summands_.push_back({std::move(box), std::move(multiplicity)});
}

ExtendedCount module_dim(const GradedModule& m, Bidegree d) {
  ExtendedCount total(0);
  for (const auto& s : m.summands()) total += ExtendedCount(s.multiplicity) * box_dim(s.box, d);
  return total;
}

Integer module_fine_dim(const GradedModule& m, const Multidegree& a) {
  Integer total = 0;
  for (const auto& s : m.summands()) {
    if (s.box.shift() != Bidegree{}) throw DimensionError("twisted summand has no fine grading");
    if (s.box.contains_monomial(a)) total += s.multiplicity;
  }
  return total;
}

GradedModule shift_module(const GradedModule& m, Bidegree s) {
  GradedModule out(m.ring());
  for (const auto& sm : m.summands()) out.add(sm.box.with_shift(sm.box.shift() + s), sm.multiplicity);
  return out;
}

std::vector<std::pair<Degree, ExtendedCount>> total_grading_dims(const GradedModule& m, Degree r_min,
                                                                 Degree r_max) {
  if (r_min > r_max) throw RangeError("r_min must not exceed r_max");
  std::vector<std::pair<Degree, ExtendedCount>> out;
  for (Degree r = r_min; r <= r_max; ++r) {
    ExtendedCount total(0);
    for (const auto& s : m.summands()) {
      const auto [xs, ys] = box_support(s.box);
      // u ranges over xs intersected with {r - v : v in ys}
      std::optional<Degree> lo = xs.lo, hi = xs.hi;
      if (ys.hi) {
        const Degree l = checked_sub(r, *ys.hi);
        lo = lo ? std::max(*lo, l) : l;
      }
      if (ys.lo) {
        const Degree h = checked_sub(r, *ys.lo);
        hi = hi ? std::min(*hi, h) : h;
      }
      if (lo && hi && *lo > *hi) continue;
      if (!lo || !hi) {
        total += ExtendedCount::infinite();
        continue;
      }
      for (Degree u = *lo; u <= *hi; ++u)
        total += ExtendedCount(s.multiplicity) * box_dim(s.box, {u, checked_sub(r, u)});
    }
    out.emplace_back(r, total);
  }
  return out;
}

std::string format_states(const BoxModule& b) {
  std::string s = "[";
  for (int j = 0; j < b.ring().size(); ++j) {
    if (j) s += " ";
    s += b.ring().var_name(j);
    s += ":";
    s += state_token(b.state(j));
  }
  return s + "]";
}

std::string format_summand(const Summand& s) {
  return format_states(s.box) + " shift=" + to_string(s.box.shift()) + " mult=" + s.multiplicity.str();
}

Summand parse_summand(const RingSpec& ring, std::string_view text) {
  static const std::regex re(
      R"(^\s*\[([^\]]*)\]\s*(?:shift=\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))?\s*(?:mult=(\d+))?\s*$)");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_match(text.begin(), text.end(), match, re))
    throw std::invalid_argument("malformed box: " + std::string(text));

  std::vector<std::optional<SupportState>> states(ring.size());
  std::istringstream tokens(match[1].str());
  std::string tok;
  while (tokens >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed box entry: " + tok);
    const std::string var = tok.substr(0, colon);
    int idx = -1;
    for (int j = 0; j < ring.size(); ++j)
      if (ring.var_name(j) == var) idx = j;
    if (idx < 0) throw std::invalid_argument("unknown variable " + var);
    if (states[idx]) throw std::invalid_argument("variable listed twice: " + var);
    states[idx] = parse_state_token(tok.substr(colon + 1));
  }
  std::vector<SupportState> resolved;
  for (int j = 0; j < ring.size(); ++j) {
    if (!states[j]) throw std::invalid_argument("missing state for " + ring.var_name(j));
    resolved.push_back(*states[j]);
  }
  Bidegree shift;
  if (match[2].matched) shift = {std::stoll(match[2].str()), std::stoll(match[3].str())};
  Integer mult = 1;
  if (match[4].matched) mult = Integer(match[4].str());
  if (mult < 1) throw std::invalid_argument("multiplicity must be positive");
  return {BoxModule(ring, std::move(resolved), shift), mult};
}

}  // namespace bilc
