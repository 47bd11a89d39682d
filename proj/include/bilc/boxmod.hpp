#ifndef BILC_BOXMOD_HPP
#define BILC_BOXMOD_HPP

#include "bilc/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bilc {

/// Exponent range allowed for one variable of a box.
enum class SupportState {
  NonNeg,   ///< exponents >= 0      (polynomial factor K[X])
  NegOnly,  ///< exponents <= -1     (X^-1 K[X^-1])
  Laurent,  ///< all exponents       (K[X, X^-1])
};

bool accepts(SupportState s, Degree e);
/// "pos", "neg", "lau".
std::string_view state_token(SupportState s);
SupportState parse_state_token(std::string_view token);

/// A graded dimension that may be countably infinite.
class ExtendedCount {
 public:
  ExtendedCount() = default;
  ExtendedCount(Integer value);  // NOLINT: implicit from finite values is intended
  ExtendedCount(long value) : ExtendedCount(Integer(value)) {}
  static ExtendedCount infinite();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }
  bool is_positive() const { return !is_zero(); }
  /// Throws InfiniteDimensionError for Infinite.
  const Integer& value() const;

  ExtendedCount& operator+=(const ExtendedCount& o);
  friend ExtendedCount operator+(ExtendedCount a, const ExtendedCount& b) { return a += b; }
  /// 0 * Infinite = 0: a product of counts of independent factors.
  friend ExtendedCount operator*(const ExtendedCount& a, const ExtendedCount& b);
  friend bool operator==(const ExtendedCount& a, const ExtendedCount& b);

 private:
  bool infinite_ = false;
  Integer value_ = 0;
};

/// Decimal value or "inf".
std::string to_string(const ExtendedCount& c);

/// Where a one-variable-group's count is nonzero: an interval of Z, each
/// end either bounded or open to infinity.
struct DegreeRange {
  std::optional<Degree> lo;
  std::optional<Degree> hi;

  bool contains(Degree x) const { return (!lo || *lo <= x) && (!hi || x <= *hi); }
  bool bounded_below() const { return lo.has_value(); }
  bool bounded_above() const { return hi.has_value(); }
  friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// Product of per-variable exponent ranges, optionally twisted:
/// the twist M(s) has M(s)_d = M_{d+s}.
class BoxModule {
 public:
  BoxModule(RingSpec ring, std::vector<SupportState> states, Bidegree shift = {});

  static BoxModule all(RingSpec ring, SupportState s);
  /// NegOnly on the variables of f, NonNeg elsewhere.
  static BoxModule inverted_on(RingSpec ring, SignPattern f);

  const RingSpec& ring() const { return ring_; }
  const std::vector<SupportState>& states() const { return states_; }
  SupportState state(int var) const { return states_.at(var); }
  Bidegree shift() const { return shift_; }
  bool has_laurent() const;

  /// Whether the monomial x^a is a basis element of the (untwisted) box.
  bool contains_monomial(const Multidegree& a) const;
  /// Bidegree of the basis monomial x^a inside the twisted module.
  Bidegree position_of(const Multidegree& a) const;

  BoxModule with_shift(Bidegree s) const;
  BoxModule with_states(std::vector<SupportState> s) const;

  friend bool operator==(const BoxModule&, const BoxModule&) = default;

 private:
  RingSpec ring_;
  std::vector<SupportState> states_;
  Bidegree shift_;
};

/// States of one variable group (X when x_group, else Y).
std::vector<SupportState> group_states(const BoxModule& b, bool x_group);

/// Number of ways to pick one exponent per state with the given sum.
/// Mixed NonNeg/NegOnly groups and groups with a Laurent variable next to
/// any other variable are infinite at every target.
ExtendedCount group_count(const std::vector<SupportState>& states, Degree target);
/// Targets at which group_count is nonzero.
DegreeRange group_support(const std::vector<SupportState>& states);

ExtendedCount box_dim(const BoxModule& b, Bidegree d);
/// Bidegrees where box_dim > 0, as a product of ranges (twist applied).
std::pair<DegreeRange, DegreeRange> box_support(const BoxModule& b);

struct Summand {
  BoxModule box;
  Integer multiplicity = 1;

  friend bool operator==(const Summand&, const Summand&) = default;
};

/// Finite direct sum of boxes. No summands means the zero module.
class GradedModule {
 public:
  explicit GradedModule(RingSpec ring) : ring_(ring) {}
  GradedModule(RingSpec ring, std::vector<Summand> summands);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Summand>& summands() const { return summands_; }
  bool is_zero() const { return summands_.empty(); }
  bool has_laurent() const;
  void add(BoxModule box, Integer multiplicity = 1);

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  RingSpec ring_;
  std::vector<Summand> summands_;
};

ExtendedCount module_dim(const GradedModule& m, Bidegree d);
/// Dimension in fine degree a. Twisted summands have no fine grading and
/// raise DimensionError.
Integer module_fine_dim(const GradedModule& m, const Multidegree& a);
GradedModule shift_module(const GradedModule& m, Bidegree s);
/// Dimension of the total degree-r piece, sum over u+v=r, for r_min..r_max.
std::vector<std::pair<Degree, ExtendedCount>> total_grading_dims(const GradedModule& m, Degree r_min,
                                                                 Degree r_max);

/// `[X1:neg X2:neg Y1:pos Y2:pos]`
std::string format_states(const BoxModule& b);
/// `[X1:neg Y1:pos] shift=(0,0) mult=1`
std::string format_summand(const Summand& s);
/// Inverse of format_summand; shift and mult are optional and default to
/// (0,0) and 1. Throws std::invalid_argument on malformed text.
Summand parse_summand(const RingSpec& ring, std::string_view text);

}  // namespace bilc

#endif  // BILC_BOXMOD_HPP
