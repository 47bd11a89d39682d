#ifndef BILC_WEYL_HPP
#define BILC_WEYL_HPP

#include "bilc/boxmod.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

/// Action of the bigraded Weyl algebra on box modules.
namespace bilc {

/// A generator of the Weyl algebra: multiplication by Xi / Yj or the
/// partial derivatives d/dXi, d/dYj. Indices are 1-based, as printed.
struct OperatorSymbol {
  enum class Kind { MulX, MulY, DX, DY };

  Kind kind;
  int index;

  static OperatorSymbol mul_x(int i) { return {Kind::MulX, i}; }
  static OperatorSymbol mul_y(int j) { return {Kind::MulY, j}; }
  static OperatorSymbol dx(int i) { return {Kind::DX, i}; }
  static OperatorSymbol dy(int j) { return {Kind::DY, j}; }

  /// (1,0), (0,1), (-1,0), (0,-1).
  Bidegree bidegree() const;
  bool is_multiplication() const { return kind == Kind::MulX || kind == Kind::MulY; }
  /// 0-based variable this operator touches. Throws IndexError if the
  /// index is outside the ring.
  int variable(const RingSpec& ring) const;

  friend bool operator==(const OperatorSymbol&, const OperatorSymbol&) = default;
};

std::string to_string(const OperatorSymbol& op);

/// Finite Q-linear combination of basis monomials of one box.
class ModuleElement {
 public:
  using Terms = std::map<Multidegree, Rational>;

  explicit ModuleElement(BoxModule box) : box_(std::move(box)) {}
  static ModuleElement monomial(BoxModule box, Multidegree a, Rational coeff = 1);

  const BoxModule& box() const { return box_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * x^a; a must be a basis monomial of the box.
  void add_term(const Multidegree& a, const Rational& c);
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement scaled(const Rational& c) const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  BoxModule box_;
  Terms terms_;
};

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
std::string to_string(const ModuleElement& e);

ModuleElement apply_operator(const OperatorSymbol& op, const ModuleElement& e);

enum class EulerSide { X, Y };

/// Sum over the group of Xi * d/dXi (derivative applied first).
ModuleElement apply_euler(EulerSide side, const ModuleElement& e);

struct EulerFailure {
  std::size_t summand = 0;
  Multidegree monomial;
  Bidegree position;
  EulerSide side = EulerSide::X;
  ModuleElement residual;
};

struct EulerReport {
  Window window;
  std::size_t monomials_checked = 0;
  /// Histogram: smallest working exponent a -> number of monomials.
  std::map<int, std::size_t> exponent_histogram;
  std::vector<EulerFailure> failures;
  /// Set when infinite components were sampled through an exponent bound.
  bool truncated = false;

  bool passed() const { return failures.empty(); }
  int max_exponent_used() const;
};

struct EulerOptions {
  int max_power = 4;
  /// Enumerate basis monomials with all exponents in [-bound, bound]. Required
  /// when the window meets an infinite component; finite components are
  /// always enumerated in full.
  std::optional<Degree> exponent_bound;
  /// When positive, at most this many evenly spaced monomials are taken from
  /// each infinite group component.
  std::size_t infinite_sample = 0;
};

/// Checks (E^X - u)^a e = 0 and (E^Y - v)^a e = 0 with a <= max_power for
/// every basis monomial e at (u,v) in the window. Throws
/// UnsupportedWindowError on an infinite component without exponent bound.
EulerReport check_generalized_eulerian(const GradedModule& m, const Window& window,
                                       const EulerOptions& options = {});

/// Basis monomials of the box at bidegree d (twist applied). Throws
/// UnsupportedWindowError if the component is infinite and no bound is set.
/// A positive sample keeps that many evenly spaced monomials per infinite
/// group component.
std::vector<Multidegree> basis_monomials(const BoxModule& b, Bidegree d,
                                         std::optional<Degree> exponent_bound = std::nullopt,
                                         std::size_t infinite_sample = 0);

struct KoszulDims {
  ExtendedCount h0;  ///< cokernel of op: M_{d - bideg op} -> M_d
  ExtendedCount h1;  ///< kernel of the same map

  friend bool operator==(const KoszulDims&, const KoszulDims&) = default;
};

/// Koszul homology of one operator at bidegree d. Every generator maps
/// basis monomials to scalar multiples of basis monomials, so kernel and
/// cokernel are counted by monomials with a fixed exponent in the touched
/// variable; infinite counts are exact.
KoszulDims koszul_homology_dims(const GradedModule& m, const OperatorSymbol& op, Bidegree d);

/// Same quantities by enumerating source and target monomials and matching
/// images one by one. Throws UnsupportedWindowError on infinite components.
KoszulDims koszul_homology_by_matching(const GradedModule& m, const OperatorSymbol& op, Bidegree d);

/// Same quantities from the rank of the operator's matrix over Q.
KoszulDims koszul_homology_by_rank(const GradedModule& m, const OperatorSymbol& op, Bidegree d);

// Cyclic presentations D/Db, where b is generated by Xi, Yj (i in W, j in V)
// and the derivatives of the remaining variables. A normal-form basis
// element is an exponent vector k: a power of the variable off W u V, a
// power of the derivative on W u V.

using CyclicElement = std::map<Multidegree, Rational>;

/// The box isomorphic to D/Db: NegOnly on W u V, NonNeg elsewhere.
BoxModule cyclic_quotient_box(const RingSpec& ring, SignPattern inverted);
/// Left action of a generator on D/Db in normal form.
CyclicElement cyclic_quotient_act(const RingSpec& ring, SignPattern inverted, const OperatorSymbol& op,
                                  const CyclicElement& w);
/// The isomorphism onto the box: derivative power c goes to
/// (-1)^c c! times the exponent -c-1.
ModuleElement cyclic_quotient_image(const RingSpec& ring, SignPattern inverted, const CyclicElement& w);

}  // namespace bilc

#endif  // BILC_WEYL_HPP
