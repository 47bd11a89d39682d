#include "bilc/cech.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace bilc {

namespace {

constexpr std::size_t kMaxComplexVertices = 20;
constexpr std::size_t kMaxOracleGenerators = 6;

SignPattern support_of(const Multidegree& a) {
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > 0) bits |= std::uint64_t{1} << j;
  return SignPattern(bits);
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Multidegree> generators)
    : ring_(ring), generators_(std::move(generators)) {
  if (generators_.empty()) throw DimensionError("an ideal needs at least one generator");
  std::vector<SignPattern> all;
  for (const auto& g : generators_) {
    if (g.size() != static_cast<std::size_t>(ring_.size()))
      throw DimensionError("generator " + to_string(g) + " has the wrong length");
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] < 0) throw DimensionError("generator " + to_string(g) + " has a negative exponent");
    const SignPattern s = support_of(g);
    if (s.empty()) throw DimensionError("the constant monomial generates the unit ideal");
    all.push_back(s);
  }
  std::ranges::sort(all);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const SignPattern s : all) {
    const bool redundant = std::ranges::any_of(all, [&](SignPattern t) { return t != s && t.subset_of(s); });
    if (!redundant) supports_.push_back(s);
  }
}

SignPattern MonomialIdeal::support_union() const {
  std::uint64_t bits = 0;
  for (const SignPattern s : supports_) bits |= s.bits();
  return SignPattern(bits);
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Multidegree> gens;
  for (const SignPattern s : supports_) {
    Multidegree g{std::vector<Degree>(ring_.size(), 0)};
    for (int j : s.members()) g[j] = 1;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ring_, std::move(gens));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Degree parse_positive(std::string_view digits, std::string_view context) {
  if (digits.empty() || !std::ranges::all_of(digits, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("expected a positive integer in '" + std::string(context) + "'");
  Degree v = 0;
  for (char c : digits) v = checked_add(checked_mul(v, 10), c - '0');
  if (v == 0) throw std::invalid_argument("zero is not allowed in '" + std::string(context) + "'");
  return v;
}

}  // namespace

Multidegree parse_monomial(const RingSpec& ring, std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw std::invalid_argument("empty monomial");
  Multidegree a{std::vector<Degree>(ring.size(), 0)};
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t star = body.find('*', start);
    const std::string_view factor = trim(body.substr(start, star == std::string_view::npos ? body.npos : star - start));
    if (factor.size() < 2 || (factor[0] != 'X' && factor[0] != 'Y'))
      throw std::invalid_argument("malformed factor '" + std::string(factor) + "'");
    const std::size_t caret = factor.find('^');
    const std::string_view index_text = trim(factor.substr(1, caret == factor.npos ? factor.npos : caret - 1));
    const Degree index = parse_positive(index_text, factor);
    const Degree limit = factor[0] == 'X' ? ring.n() : ring.m();
    if (index > limit) throw std::invalid_argument("unknown variable " + std::string(factor.substr(0, caret)));
    const Degree exponent = caret == factor.npos ? 1 : parse_positive(trim(factor.substr(caret + 1)), factor);
    const int var = factor[0] == 'X' ? static_cast<int>(index - 1) : ring.n() + static_cast<int>(index - 1);
    a[var] = checked_add(a[var], exponent);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return a;
}

MonomialIdeal parse_ideal(const RingSpec& ring, std::string_view text) {
  std::vector<Multidegree> gens;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    gens.push_back(parse_monomial(ring, text.substr(start, comma == text.npos ? text.npos : comma - start)));
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::string render_monomial(const RingSpec& ring, const Multidegree& a) {
  std::string s;
  for (int j = 0; j < ring.size(); ++j) {
    if (a[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(j);
    if (a[j] != 1) s += "^" + std::to_string(a[j]);
  }
  return s.empty() ? "1" : s;
}

std::string render_ideal(const MonomialIdeal& ideal) {
  std::string s;
  for (const auto& g : ideal.generators()) {
    if (!s.empty()) s += ", ";
    s += render_monomial(ideal.ring(), g);
  }
  return s;
}

namespace {

// Sign of inserting vertex v into sigma: (-1)^(position of v in the result).
int face_sign(std::uint32_t sigma, int v) {
  const int below = std::popcount(sigma & ((std::uint32_t{1} << v) - 1));
  return below % 2 == 0 ? 1 : -1;
}

// Builds the complex over vertices 0..s-1 given which subsets are admissible.
// Admissible families are closed upwards, so the differential stays inside.
template <typename Admissible>
std::vector<ComplexTerm> build_complex(std::size_t s, Admissible&& admissible) {
  std::vector<ComplexTerm> terms(s + 1);
  for (std::size_t p = 0; p <= s; ++p) terms[p].degree = static_cast<int>(p);
  for (std::uint32_t sigma = 0; sigma < (std::uint32_t{1} << s); ++sigma)
    if (admissible(sigma)) terms[std::popcount(sigma)].basis.push_back(sigma);
  for (std::size_t p = 0; p <= s; ++p) {
    const auto& src = terms[p].basis;
    const std::vector<std::uint32_t> empty;
    const auto& tgt = p < s ? terms[p + 1].basis : empty;
    RationalMatrix d(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (int v = 0; v < static_cast<int>(s); ++v) {
        if ((src[c] >> v) & 1U) continue;
        const std::uint32_t tau = src[c] | (std::uint32_t{1} << v);
        const auto it = std::ranges::lower_bound(tgt, tau);
        if (it == tgt.end() || *it != tau) throw DimensionError("admissible family is not closed upwards");
        d.at(static_cast<std::size_t>(it - tgt.begin()), c) = face_sign(src[c], v);
      }
    terms[p].differential = std::move(d);
  }
  return terms;
}

template <typename RankFn>
std::vector<std::size_t> cohomology_with(const std::vector<ComplexTerm>& complex, RankFn&& rank_of) {
  std::vector<std::size_t> ranks;
  for (const auto& t : complex) ranks.push_back(rank_of(t.differential));
  std::vector<std::size_t> h;
  for (std::size_t p = 0; p < complex.size(); ++p) {
    const std::size_t incoming = p == 0 ? 0 : ranks[p - 1];
    h.push_back(complex[p].basis.size() - ranks[p] - incoming);
  }
  return h;
}

}  // namespace

std::vector<ComplexTerm> degreewise_complex(const MonomialIdeal& ideal, SignPattern f) {
  const auto& supports = ideal.supports();
  if (supports.size() > kMaxComplexVertices) throw RangeError("too many minimal generators for a Cech complex");
  return build_complex(supports.size(), [&](std::uint32_t sigma) {
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < supports.size(); ++i)
      if ((sigma >> i) & 1U) covered |= supports[i].bits();
    return f.subset_of(SignPattern(covered));
  });
}

std::vector<std::size_t> complex_cohomology(const std::vector<ComplexTerm>& complex) {
  return cohomology_with(complex, [](const RationalMatrix& m) { return rank(m); });
}

CohomologyTable cohomology_table(const MonomialIdeal& ideal) {
  CohomologyTable table;
  // Outside the union of supports nothing is admissible, so only its subsets
  // can carry cohomology.
  const std::uint64_t universe = ideal.support_union().bits();
  std::uint64_t f = 0;
  while (true) {
    const auto h = complex_cohomology(degreewise_complex(ideal, SignPattern(f)));
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] > 0) table[{static_cast<int>(i), SignPattern(f)}] = h[i];
    if (f == universe) break;
    f = (f - universe) & universe;
  }
  return table;
}

GradedModule local_cohomology(const MonomialIdeal& ideal, const CohomologyTable& table, int i) {
  const RingSpec& ring = ideal.ring();
  if (i < 0 || i > ring.size())
    throw RangeError("cohomological degree " + std::to_string(i) + " outside 0.." + std::to_string(ring.size()));
  GradedModule out(ring);
  for (const auto& [key, h] : table)
    if (key.first == i) out.add(BoxModule::inverted_on(ring, key.second), Integer(h));
  return out;
}

GradedModule local_cohomology(const MonomialIdeal& ideal, int i) {
  const RingSpec& ring = ideal.ring();
  if (i < 0 || i > ring.size())
    throw RangeError("cohomological degree " + std::to_string(i) + " outside 0.." + std::to_string(ring.size()));
  return local_cohomology(ideal, cohomology_table(ideal), i);
}

CechOracle::CechOracle(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
  const auto& gens = ideal_.generators();
  if (gens.size() > kMaxOracleGenerators) throw RangeError("oracle supports at most 6 generators");
  const std::size_t len = ideal_.ring().size();
  for (std::uint32_t sigma = 0; sigma < (std::uint32_t{1} << gens.size()); ++sigma) {
    Multidegree l{std::vector<Degree>(len, 0)};
    for (std::size_t i = 0; i < gens.size(); ++i)
      if ((sigma >> i) & 1U)
        for (std::size_t j = 0; j < len; ++j) l[j] = std::max(l[j], gens[i][j]);
    lcms_.push_back(std::move(l));
  }
}

const std::vector<std::size_t>& CechOracle::dims(const Multidegree& a) {
  if (a.size() != static_cast<std::size_t>(ideal_.ring().size())) throw DimensionError("multidegree length mismatch");
  // Bit sigma of the family is set when R localized at the lcm over sigma
  // has a nonzero component in degree a.
  std::uint64_t family = 0;
  for (std::size_t sigma = 0; sigma < lcms_.size(); ++sigma) {
    bool member = true;
    for (std::size_t j = 0; j < a.size() && member; ++j) member = a[j] >= 0 || lcms_[sigma][j] > 0;
    if (member) family |= std::uint64_t{1} << sigma;
  }
  auto it = cache_.find(family);
  if (it == cache_.end()) {
    const auto complex = build_complex(ideal_.generators().size(),
                                       [&](std::uint32_t sigma) { return ((family >> sigma) & 1U) != 0; });
    for (const auto& t : complex) {
      const RationalMatrix& d = t.differential;
      if (d.rows() == 0) continue;
      // d o d must vanish
      const auto* next = t.degree + 1 < static_cast<int>(complex.size()) ? &complex[t.degree + 1] : nullptr;
      if (next && !multiply(next->differential, d).is_zero()) throw DimensionError("Cech differential squares to nonzero");
    }
    it = cache_.emplace(family, cohomology_with(complex, [](const RationalMatrix& m) { return rank_fraction_free(m); }))
             .first;
  }
  return it->second;
}

std::size_t CechOracle::dim(int i, const Multidegree& a) {
  const auto& h = dims(a);
  if (i < 0 || static_cast<std::size_t>(i) >= h.size()) return 0;
  return h[i];
}

std::size_t oracle_dim(const MonomialIdeal& ideal, int i, const Multidegree& a) {
  CechOracle oracle(ideal);
  return oracle.dim(i, a);
}

GradedModule localize(const GradedModule& m, const Multidegree& f) {
  const RingSpec& ring = m.ring();
  if (f.size() != static_cast<std::size_t>(ring.size())) throw DimensionError("localizing monomial has the wrong length");
  for (std::size_t j = 0; j < f.size(); ++j)
    if (f[j] < 0) throw DimensionError("localizing monomial has a negative exponent");
  const SignPattern s = support_of(f);
  if (s.empty()) throw DimensionError("cannot localize at a constant");

  GradedModule out(ring);
  std::vector<Summand> merged;
  for (const auto& sm : m.summands()) {
    auto states = sm.box.states();
    bool killed = false;
    for (int j : s.members()) {
      if (states[j] == SupportState::NegOnly) killed = true;
      states[j] = SupportState::Laurent;
    }
    if (killed) continue;
    BoxModule box = sm.box.with_states(std::move(states));
    auto it = std::ranges::find_if(merged, [&](const Summand& x) { return x.box == box; });
    if (it == merged.end())
      merged.push_back({std::move(box), sm.multiplicity});
    else
      it->multiplicity += sm.multiplicity;
  }
  for (auto& sm : merged) out.add(std::move(sm.box), std::move(sm.multiplicity));
  return out;
}

namespace {

const std::vector<SpecialRegistryEntry>& registry() {
  static const std::vector<SpecialRegistryEntry> entries = [] {
    const RingSpec ring(3, 3);
    GradedModule e(ring);
    e.add(BoxModule::all(ring, SupportState::NegOnly));
    return std::vector<SpecialRegistryEntry>{
        {"binomial_edge_K3", ring, 3, std::move(e),
         "H^3 of the binomial edge ideal of the complete graph K3 (2x2 minors of a generic 2x3 matrix, "
         "rows X1..X3 and Y1..Y3) is the injective hull E_R(K); U. Walther, Example 6.1"}};
  }();
  return entries;
}

}  // namespace

const SpecialRegistryEntry& special_module(std::string_view name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw LookupError("no registered module named '" + std::string(name) + "'");
}

std::vector<std::string> special_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.push_back(e.name);
  return names;
}

}  // namespace bilc
