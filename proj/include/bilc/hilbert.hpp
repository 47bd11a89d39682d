#ifndef BILC_HILBERT_HPP
#define BILC_HILBERT_HPP

#include "bilc/boxmod.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

/// Bigraded Hilbert series of box sums and quadrant dimension polynomials.
namespace bilc {

/// One box per term. Each variable contributes the formal series of its
/// state: NonNeg 1/(1-t), NegOnly t^-1/(1-t^-1) expanded in t^-1.
struct SeriesTerm {
  Integer multiplicity;
  BoxModule box;
};

struct HilbertSeries {
  RingSpec ring;
  /// Order: NE, NW*, S*W*, S*E boxes, then mixed ones; stable otherwise.
  std::vector<SeriesTerm> terms;
};

/// Throws NoRationalSeriesError if any summand has a Laurent state.
HilbertSeries hilbert_series(const GradedModule& m);

/// True iff the support avoids -n < u < 0 and -m < v < 0.
bool verify_terai_hypothesis(const GradedModule& m);

/// Corner dimensions d1..d4 at (0,0), (-n,0), (-n,-m), (0,-m).
std::array<ExtendedCount, 4> corner_dims(const GradedModule& m);

/// `d * t1^<s> * t2^<s> / ((1-t1^<+-1>)^n (1-t2^<+-1>)^m)` per term,
/// joined by " + ".
std::string render_quadrant_form(const HilbertSeries& s);

/// The four-corner expression built from corner_dims, zero terms omitted.
/// Only defined when the hypothesis holds and every summand is an
/// untwisted box whose groups are each all NonNeg or all NegOnly.
std::optional<std::string> render_four_corner_form(const GradedModule& m);

/// Everything over (1-t1)^n (1-t2)^m. Since t^-1/(1-t^-1) = -1/(1-t), a
/// term contributes (-1)^(number of NegOnly variables) t^-shift.
std::string render_normalized_form(const HilbertSeries& s);

/// Numerator of the normalized form: exponent (e1,e2) -> coefficient.
std::map<std::pair<Degree, Degree>, Integer> normalized_numerator(const HilbertSeries& s);

struct RenderedSeries {
  std::string text;
  /// "quadrant-series": each fraction is expanded in its own quadrant.
  /// "rational-function": identity of rational functions only.
  std::string semantics;
};

/// Normalized form if asked, else the four-corner form when defined, else
/// the quadrant form.
RenderedSeries render_series(const GradedModule& m, bool normalize);

/// Value at a rational point, summing each term as a rational function.
/// The point must avoid t = 0 and t = 1.
Rational evaluate_quadrant_form(const HilbertSeries& s, const Rational& t1, const Rational& t2);
Rational evaluate_normalized_form(const HilbertSeries& s, const Rational& t1, const Rational& t2);

/// Coefficients of the formal expansion, by explicit convolution of the
/// one-variable series. A group mixing NonNeg and NegOnly has infinitely
/// many terms in every degree.
std::map<Bidegree, ExtendedCount> eval_series_window(const HilbertSeries& s, const Window& w);

enum class Quadrant { NE, NWstar, SstarWstar, SstarE };
std::string to_string(Quadrant q);

/// coef * C(sx*u + alpha, j) * C(sy*v + beta, k)
struct BinomialTerm {
  Integer coef;
  int sx = 1;
  Integer alpha;
  unsigned j = 0;
  int sy = 1;
  Integer beta;
  unsigned k = 0;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

struct QuadrantPolynomial {
  Quadrant quadrant = Quadrant::NE;
  std::vector<BinomialTerm> terms;

  bool is_zero() const { return terms.empty(); }
  Integer evaluate(Bidegree d) const;
};

std::string to_string(const QuadrantPolynomial& p);

/// Sum of per-box closed forms in the quadrant: a NonNeg group of size k
/// gives C(u+s+k-1, k-1), a NegOnly group of size l gives C(-(u+s)-1, l-1),
/// a single Laurent variable gives 1; boxes vanishing on the quadrant
/// contribute nothing. Throws InfiniteDimensionError when some box has
/// infinite dimensions on the quadrant. Exact wherever each summand's
/// shifted degree stays on the quadrant's side, which for untwisted
/// modules is the whole quadrant.
QuadrantPolynomial dimension_polynomial(const GradedModule& m, Quadrant q);

/// Whether d is in q at offset >= max(n,m) from the quadrant's corner.
bool deep_in_quadrant(const RingSpec& ring, Quadrant q, Bidegree d);

}  // namespace bilc

#endif  // BILC_HILBERT_HPP
