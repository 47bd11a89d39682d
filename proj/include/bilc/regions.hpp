#ifndef BILC_REGIONS_HPP
#define BILC_REGIONS_HPP

#include "bilc/boxmod.hpp"

#include <optional>
#include <string>
#include <vector>

/// Regions of the (u,v)-plane and the vanishing, tameness and rigidity
/// checks on graded dimensions.
namespace bilc {

enum class RegionKind {
  NE,          ///< u >= 0, v >= 0
  NWstar,      ///< u <= -n, v >= 0
  SstarWstar,  ///< u <= -n, v <= -m
  SstarE,      ///< u >= 0, v <= -m
  C,           ///< the whole plane
  N,           ///< v >= 0
  Wstar,       ///< u <= -n
  Sstar,       ///< v <= -m
  E,           ///< u >= 0
  TrunN,       ///< -n < u < 0, v >= 0
  TrunWstar,   ///< u <= -n, -m < v < 0
  TrunSstar,   ///< -n < u < 0, v <= -m
  TrunE,       ///< u >= 0, -m < v < 0
  Block,       ///< quadrant at a corner
  /// Quadrant at any point, opening towards u >= u0 when u0 > -n (else
  /// u <= u0) and likewise in v.
  Translate,
};

struct RegionLabel {
  RegionKind kind = RegionKind::C;
  /// Only meaningful for Block and Translate.
  Bidegree corner;

  static RegionLabel of(RegionKind k) { return {k, {}}; }
  static RegionLabel block(Bidegree corner) { return {RegionKind::Block, corner}; }
  static RegionLabel translate(Bidegree corner) { return {RegionKind::Translate, corner}; }

  friend bool operator==(const RegionLabel&, const RegionLabel&) = default;
};

/// "NE", "NW*", "S*W*", "S*E", "C", "N", "W*", "S*", "E", "Trun(N)", ...,
/// "Block(u,v)", "V(u,v)".
std::string to_string(const RegionLabel& label);
/// The thirteen fixed labels in declaration order.
const std::vector<RegionLabel>& fixed_labels();

/// Throws InvalidCornerError for a block corner with -n < u0 < 0 or
/// -m < v0 < 0.
bool region_contains(const RingSpec& ring, const RegionLabel& label, Bidegree d);

/// Behavior of one variable group: u >= 0, u <= -n (resp. v), or all of Z.
enum class AxisSupport { NonNegHalf, NegHalf, All };
std::string to_string(AxisSupport s, bool x_group);

struct SummandSupport {
  AxisSupport x = AxisSupport::All;
  AxisSupport y = AxisSupport::All;
  /// Exact support ranges, twist applied.
  DegreeRange x_range;
  DegreeRange y_range;
  /// Minimal cover of this summand's own support.
  std::vector<RegionLabel> labels;
};

struct SupportClassification {
  std::vector<SummandSupport> summands;
  /// Minimal set of fixed labels whose union is the support of the module.
  std::vector<RegionLabel> labels;
  /// False when some twisted summand is not a union of the nine cells cut
  /// out by u = 0, u = -n, v = 0, v = -m; labels are then empty.
  bool exact = true;
};

SupportClassification classify_support(const GradedModule& m);
/// Labels joined with '+'; "0" for the zero module.
std::string render_labels(const std::vector<RegionLabel>& labels);

struct CheckLine {
  std::string name;
  bool pass = true;
  std::string detail;
  /// Not applicable to the input; counts as neither pass nor failure.
  bool skipped = false;
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool passed() const;
  void add(std::string name, bool pass, std::string detail = {});
  void skip(std::string name, std::string reason);
  void append(const CheckReport& other, const std::string& prefix = {});
};

/// One line per check: `PASS name detail`, `FAIL name detail` or
/// `SKIP name reason`.
std::string render(const CheckReport& report);

/// Throws WindowError unless the window holds (0,0), (-n,0), (-n,-m), (0,-m).
CheckReport verify_rigidity(const GradedModule& m, const Window& window);

struct Band {
  Degree a1, b1, a2, b2;
};

/// The band [-n,0] x [-m,0].
Band default_band(const RingSpec& ring);

/// Every nonzero summand must have a nonzero point with u outside [a1,b1]
/// and v outside [a2,b2]. Throws RangeError unless a1 < b1 and a2 < b2.
CheckReport verify_vanishing(const GradedModule& m, const Band& band);

/// Exhibits a region on which m is nonzero at every window point. The
/// module's own region is preferred when its support is a single label;
/// otherwise searches the quadrant blocks, the half-planes, the plane, then
/// the quadrant translate anchored at the first nonzero window point.
CheckReport verify_tameness(const GradedModule& m, const Window& window);

/// The region found by verify_tameness, if any.
std::optional<RegionLabel> tame_region(const GradedModule& m, const Window& window);

}  // namespace bilc

#endif  // BILC_REGIONS_HPP
