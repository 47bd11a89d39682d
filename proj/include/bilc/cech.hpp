#ifndef BILC_CECH_HPP
#define BILC_CECH_HPP

#include "bilc/boxmod.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

/// Local cohomology of monomial ideals through degreewise Cech complexes.
namespace bilc {

/// Monomial ideal given by exponent vectors in N^{n+m}. The generator list
/// is kept exactly as given; supports() is the normalized radical form.
class MonomialIdeal {
 public:
  /// Throws DimensionError for an empty list, a wrong length, a negative
  /// exponent or the zero vector (the unit ideal).
  MonomialIdeal(RingSpec ring, std::vector<Multidegree> generators);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Multidegree>& generators() const { return generators_; }
  /// Minimal supports of the generators, deduplicated, sorted by mask.
  const std::vector<SignPattern>& supports() const { return supports_; }
  /// Union of all generator supports.
  SignPattern support_union() const;
  /// The squarefree ideal with generators supports().
  MonomialIdeal radical() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.generators_ == b.generators_;
  }

 private:
  RingSpec ring_;
  std::vector<Multidegree> generators_;
  std::vector<SignPattern> supports_;
};

/// `X1^2*Y3`. Throws std::invalid_argument on unknown variables, a zero or
/// missing exponent, or an empty product.
Multidegree parse_monomial(const RingSpec& ring, std::string_view text);
/// Comma-separated list of monomials.
MonomialIdeal parse_ideal(const RingSpec& ring, std::string_view text);
std::string render_monomial(const RingSpec& ring, const Multidegree& a);
std::string render_ideal(const MonomialIdeal& ideal);

/// One term C^p of a degreewise complex and the differential C^p -> C^{p+1}.
struct ComplexTerm {
  int degree = 0;
  /// Admissible subsets of size p, as bit masks over supports(), ascending.
  std::vector<std::uint32_t> basis;
  RationalMatrix differential;
};

/// The Cech complex on supports() restricted to fine degrees with sign
/// pattern F. Terms run over p = 0..supports().size().
std::vector<ComplexTerm> degreewise_complex(const MonomialIdeal& ideal, SignPattern f);

/// dim H^p for each term of a complex.
std::vector<std::size_t> complex_cohomology(const std::vector<ComplexTerm>& complex);

/// (i, F) -> h^i(F); only nonzero entries are stored.
using CohomologyTable = std::map<std::pair<int, SignPattern>, std::size_t>;

CohomologyTable cohomology_table(const MonomialIdeal& ideal);

/// H^i_I(R) as a sum of boxes, NegOnly exactly on each F with h^i(F) > 0.
/// Throws RangeError unless 0 <= i <= n+m.
GradedModule local_cohomology(const MonomialIdeal& ideal, int i);
GradedModule local_cohomology(const MonomialIdeal& ideal, const CohomologyTable& table, int i);

/// Independent per-degree computation from the original generators: the
/// localization at the lcm of a subset has a nonzero component at a iff
/// a + k * lcm >= 0 for some k >= 0. Results are cached per admissible
/// family, so one instance should serve a whole sweep.
class CechOracle {
 public:
  explicit CechOracle(MonomialIdeal ideal);

  /// dim H^i_I(R)_a for every i at once, indexed by i = 0..generators.
  const std::vector<std::size_t>& dims(const Multidegree& a);
  std::size_t dim(int i, const Multidegree& a);

 private:
  MonomialIdeal ideal_;
  std::vector<Multidegree> lcms_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cache_;
};

std::size_t oracle_dim(const MonomialIdeal& ideal, int i, const Multidegree& a);

/// Inverts the variables of supp(f). NonNeg becomes Laurent; a NegOnly
/// factor is torsion for its own variable, so such summands vanish.
/// Summands that become equal are merged. Throws DimensionError if f is
/// zero, negative or of the wrong length.
GradedModule localize(const GradedModule& m, const Multidegree& f);

struct SpecialRegistryEntry {
  std::string name;
  RingSpec ring;
  int degree;
  GradedModule module;
  std::string provenance;
};

/// Throws LookupError for unknown names.
const SpecialRegistryEntry& special_module(std::string_view name);
std::vector<std::string> special_names();

}  // namespace bilc

#endif  // BILC_CECH_HPP
