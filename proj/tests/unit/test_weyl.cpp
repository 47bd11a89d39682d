#include "bilc/cech.hpp"
#include "bilc/weyl.hpp"
#include "corpus.hpp"

#include <catch_amalgamated.hpp>

#include <set>

using namespace bilc;

namespace {

constexpr auto P = SupportState::NonNeg;
constexpr auto N = SupportState::NegOnly;
constexpr auto L = SupportState::Laurent;

Multidegree md(std::vector<Degree> e) { return Multidegree{std::move(e)}; }

/// Kernel and cokernel counted straight from the monomial rules, for boxes
/// with finite components only.
KoszulDims naive_koszul(const GradedModule& m, const OperatorSymbol& op, Bidegree d) {
  const int var = op.variable(m.ring());
  Integer h0 = 0, h1 = 0;
  for (const auto& s : m.summands()) {
    const auto src = basis_monomials(s.box, d - op.bidegree());
    const auto tgt = basis_monomials(s.box, d);
    std::set<Multidegree> hit;
    for (auto a : src) {
      const bool mul = op.is_multiplication();
      const Degree coeff = mul ? 1 : a[var];
      a[var] += mul ? 1 : -1;
      if (coeff == 0 || !s.box.contains_monomial(a))
        h1 += s.multiplicity;
      else
        hit.insert(a);
    }
    h0 += s.multiplicity * Integer(tgt.size() - hit.size());
  }
  return {ExtendedCount(h0), ExtendedCount(h1)};
}

const OperatorSymbol kOps[] = {OperatorSymbol::mul_x(1), OperatorSymbol::dx(1), OperatorSymbol::mul_y(1),
                               OperatorSymbol::dy(1)};

}  // namespace

TEST_CASE("derivative of negative powers", "[weyl]") {
  const RingSpec ring(1, 1);
  const BoxModule b(ring, {N, P});
  auto e = ModuleElement::monomial(b, md({-1, 0}));
  const auto d1 = apply_operator(OperatorSymbol::dx(1), e);
  CHECK(d1 == ModuleElement::monomial(b, md({-2, 0}), -1));
  // d^c X^-a = (-1)^c (a+c-1)!/(a-1)! X^(-a-c), here a = 2
  e = ModuleElement::monomial(b, md({-2, 0}));
  Rational expected = 1;
  for (int c = 1; c <= 5; ++c) {
    e = apply_operator(OperatorSymbol::dx(1), e);
    expected *= -(2 + c - 1);
    CHECK(e == ModuleElement::monomial(b, md({-2 - c, 0}), expected));
  }
}

TEST_CASE("multiplication kills X^-1 in the quotient", "[weyl]") {
  const RingSpec ring(1, 1);
  const BoxModule b(ring, {N, P});
  CHECK(apply_operator(OperatorSymbol::mul_x(1), ModuleElement::monomial(b, md({-1, 0}))).is_zero());
  CHECK(apply_operator(OperatorSymbol::mul_x(1), ModuleElement::monomial(b, md({-3, 0}))) ==
        ModuleElement::monomial(b, md({-2, 0})));
}

TEST_CASE("derivative of positive powers", "[weyl]") {
  const RingSpec ring(1, 1);
  const BoxModule b(ring, {P, P});
  auto e = ModuleElement::monomial(b, md({3, 0}));
  CHECK(apply_operator(OperatorSymbol::dx(1), e) == ModuleElement::monomial(b, md({2, 0}), 3));
  for (int c = 0; c < 3; ++c) e = apply_operator(OperatorSymbol::dx(1), e);
  CHECK(e == ModuleElement::monomial(b, md({0, 0}), 6));
  CHECK(apply_operator(OperatorSymbol::dx(1), e).is_zero());
}

TEST_CASE("operator index out of range", "[weyl]") {
  const RingSpec ring(1, 2);
  const auto e = ModuleElement::monomial(BoxModule::all(ring, P), md({0, 0, 0}));
  CHECK_THROWS_AS(apply_operator(OperatorSymbol::mul_x(2), e), IndexError);
  CHECK_THROWS_AS(apply_operator(OperatorSymbol::dy(0), e), IndexError);
  CHECK_NOTHROW(apply_operator(OperatorSymbol::dy(2), e));
}

TEST_CASE("Euler operators", "[weyl]") {
  const RingSpec ring(2, 2);
  const BoxModule b(ring, {N, N, P, P});
  const auto e = ModuleElement::monomial(b, md({-1, -1, 1, 0}));
  CHECK(apply_euler(EulerSide::X, e) == e.scaled(-2));
  const auto one = ModuleElement::monomial(BoxModule::all(ring, P), md({0, 0, 0, 0}));
  CHECK(apply_euler(EulerSide::X, one).is_zero());
  const auto y = ModuleElement::monomial(BoxModule::all(ring, P), md({0, 0, 2, 1}));
  CHECK(apply_euler(EulerSide::Y, y) == y.scaled(3));
}

TEST_CASE("every basis monomial is an Euler eigenvector", "[weyl][property]") {
  const RingSpec ring(2, 1);
  for (auto s0 : {P, N, L})
    for (auto s1 : {P, N, L})
      for (auto s2 : {P, N, L}) {
        const BoxModule b(ring, {s0, s1, s2});
        for (const Bidegree d : square_window(3).points())
          for (const auto& a : basis_monomials(b, d, 4)) {
            const auto e = ModuleElement::monomial(b, a);
            CHECK(apply_euler(EulerSide::X, e) == e.scaled(d.u));
            CHECK(apply_euler(EulerSide::Y, e) == e.scaled(d.v));
          }
      }
}

TEST_CASE("operators move bidegrees by their own bidegree", "[weyl][property]") {
  const RingSpec ring(2, 2);
  const BoxModule b(ring, {N, P, L, N});
  const OperatorSymbol ops[] = {OperatorSymbol::mul_x(1), OperatorSymbol::mul_x(2), OperatorSymbol::dx(1),
                                OperatorSymbol::dx(2),    OperatorSymbol::mul_y(1), OperatorSymbol::mul_y(2),
                                OperatorSymbol::dy(1),    OperatorSymbol::dy(2)};
  for (const Bidegree d : square_window(3).points())
    for (const auto& a : basis_monomials(b, d, 4))
      for (const auto& op : ops) {
        const auto image = apply_operator(op, ModuleElement::monomial(b, a));
        for (const auto& [c, coeff] : image.terms()) CHECK(b.position_of(c) == d + op.bidegree());
      }
}

TEST_CASE("generalized Eulerian check", "[weyl]") {
  const RingSpec ring(2, 2);
  const GradedModule r(ring, {{BoxModule::all(ring, P), 1}});
  auto rep = check_generalized_eulerian(r, square_window(4));
  CHECK(rep.passed());
  CHECK(rep.max_exponent_used() == 1);
  const GradedModule e(ring, {{BoxModule::all(ring, N), 1}});
  rep = check_generalized_eulerian(e, Window{-4, -1, -4, -1});
  CHECK(rep.passed());
  CHECK(rep.max_exponent_used() == 1);
  CHECK(rep.monomials_checked > 0);
  const auto h2 = local_cohomology(corpus::ideal(2, 2, "X1, X2"), 2);
  rep = check_generalized_eulerian(h2, square_window(4));
  CHECK(rep.passed());
  CHECK(rep.exponent_histogram.size() == 1);
}

TEST_CASE("Eulerian check needs a bound on infinite components", "[weyl]") {
  const RingSpec ring(2, 1);
  const GradedModule m(ring, {{BoxModule(ring, {P, N, P}), 1}});
  CHECK_THROWS_AS(check_generalized_eulerian(m, square_window(1)), UnsupportedWindowError);
  EulerOptions opts;
  opts.exponent_bound = 5;
  opts.infinite_sample = 4;
  const auto rep = check_generalized_eulerian(m, square_window(1), opts);
  CHECK(rep.passed());
  CHECK(rep.truncated);
}

TEST_CASE("a twisted box is not Eulerian", "[weyl]") {
  const RingSpec ring(1, 1);
  const GradedModule m(ring, {{BoxModule(ring, {N, P}, {1, 0}), 1}});
  const auto rep = check_generalized_eulerian(m, square_window(3));
  CHECK_FALSE(rep.passed());
  CHECK(rep.failures.front().side == EulerSide::X);
}

TEST_CASE("Koszul homology examples", "[weyl]") {
  const RingSpec ring(1, 1);
  const GradedModule h1(ring, {{BoxModule(ring, {N, P}), 1}});
  CHECK(koszul_homology_dims(h1, OperatorSymbol::mul_x(1), {0, 0}) == KoszulDims{0L, 1L});
  const GradedModule r(ring, {{BoxModule::all(ring, P), 1}});
  CHECK(koszul_homology_dims(r, OperatorSymbol::dx(1), {-1, 0}) == KoszulDims{0L, 1L});
  CHECK(koszul_homology_dims(r, OperatorSymbol::mul_x(1), {3, 0}) == KoszulDims{0L, 0L});
}

TEST_CASE("three Koszul routes agree", "[weyl][property]") {
  for (const auto& [name, m] : corpus::modules()) {
    if (m.ring().size() > 4) continue;
    for (const auto& op : kOps)
      for (const Bidegree d : square_window(4).points()) {
        const auto fast = koszul_homology_dims(m, op, d);
        bool finite = true;
        for (const auto& s : m.summands())
          finite = finite && box_dim(s.box, d).is_finite() && box_dim(s.box, d - op.bidegree()).is_finite();
        if (!finite) {
          CHECK_THROWS_AS(koszul_homology_by_matching(m, op, d), UnsupportedWindowError);
          continue;
        }
        INFO(name << " " << to_string(op) << " at " << to_string(d));
        CHECK(fast == koszul_homology_by_matching(m, op, d));
        CHECK(fast == koszul_homology_by_rank(m, op, d));
        CHECK(fast == naive_koszul(m, op, d));
      }
  }
}

TEST_CASE("Koszul Euler characteristic", "[weyl][property]") {
  for (const auto& [name, m] : corpus::modules())
    for (const auto& op : kOps)
      for (const Bidegree d : square_window(5).points()) {
        const auto k = koszul_homology_dims(m, op, d);
        const auto tgt = module_dim(m, d), src = module_dim(m, d - op.bidegree());
        if (tgt.is_infinite() || src.is_infinite()) continue;
        INFO(name << " " << to_string(op) << " at " << to_string(d));
        CHECK(k.h0.value() - k.h1.value() == tgt.value() - src.value());
      }
}

TEST_CASE("Koszul support for one X variable", "[weyl][property]") {
  for (const auto& [name, m] : corpus::modules()) {
    if (m.ring().n() != 1) continue;
    for (const Bidegree d : square_window(6).points()) {
      INFO(name << " at " << to_string(d));
      if (d.u != 0) CHECK(koszul_homology_dims(m, OperatorSymbol::mul_x(1), d) == KoszulDims{0L, 0L});
      if (d.u != -1) CHECK(koszul_homology_dims(m, OperatorSymbol::dx(1), d) == KoszulDims{0L, 0L});
    }
  }
}

TEST_CASE("cyclic quotients match their boxes", "[weyl][property]") {
  const RingSpec ring(2, 1);
  const OperatorSymbol ops[] = {OperatorSymbol::mul_x(1), OperatorSymbol::mul_x(2), OperatorSymbol::dx(1),
                                OperatorSymbol::dx(2), OperatorSymbol::mul_y(1), OperatorSymbol::dy(1)};
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    const SignPattern w(bits);
    CHECK(cyclic_quotient_box(ring, w) == BoxModule::inverted_on(ring, w));
    for (Degree k0 = 0; k0 <= 2; ++k0)
      for (Degree k1 = 0; k1 <= 2; ++k1)
        for (Degree k2 = 0; k2 <= 2; ++k2) {
          const CyclicElement v{{md({k0, k1, k2}), Rational(1)}};
          const auto image = cyclic_quotient_image(ring, w, v);
          for (const auto& op : ops) {
            INFO("W=" << bits << " k=(" << k0 << "," << k1 << "," << k2 << ") " << to_string(op));
            CHECK(cyclic_quotient_image(ring, w, cyclic_quotient_act(ring, w, op, v)) == apply_operator(op, image));
          }
        }
  }
}

TEST_CASE("cyclic generator image", "[weyl]") {
  const RingSpec ring(1, 1);
  const SignPattern w = SignPattern::of({0});
  const CyclicElement v{{md({3, 0}), Rational(1)}};
  // d^3 maps to (-1)^3 3! X^-4
  CHECK(cyclic_quotient_image(ring, w, v) == ModuleElement::monomial(BoxModule(ring, {N, P}), md({-4, 0}), -6));
}
