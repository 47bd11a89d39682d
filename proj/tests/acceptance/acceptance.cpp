/// Acceptance suite. Prints one PASS/FAIL line per criterion and exits 1 if
/// any criterion fails.
#include "bilc/cech.hpp"
#include "bilc/cli.hpp"
#include "bilc/hilbert.hpp"
#include "bilc/regions.hpp"
#include "bilc/weyl.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace bilc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  /// Records the first failure only.
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
  std::vector<const char*> argv{"bilc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + err.str();
}

std::string write_config(const JobConfig& c, const std::string& tag) {
  const auto path =
      std::filesystem::temp_directory_path() / ("bilc_acceptance_" + std::to_string(::getpid()) + "_" + tag + ".cfg");
  std::ofstream(path) << render_config(c);
  return path.string();
}

Outcome closed_form_corpus() {
  Outcome o;
  const auto t0 = Clock::now();
  int jobs = 0;
  for (const auto& [n, m] : {std::pair{2, 2}, {3, 3}})
    for (const auto& cf : corpus::closed_forms(n, m)) {
      JobConfig c;
      c.ring = cf.ideal.ring();
      c.ideal = cf.ideal;
      const auto path = write_config(c, "closed");
      for (int i = 0; i <= n + m; ++i) {
        int code = 0;
        const auto text = run_cli_capture({"compute", "--config", path, "--degree", std::to_string(i)}, code);
        const std::string expected = i == cf.degree
                                         ? format_states(cf.box) + " mult=1 region=" + cf.region + "\n"
                                         : std::string("ZERO MODULE\n");
        ++jobs;
        if (code != 0 || text != expected)
          o.fail(cf.name + " n=" + std::to_string(n) + " i=" + std::to_string(i) + " gave '" + text + "'");
      }
      std::filesystem::remove(path);
    }
  const double s = seconds_since(t0);
  if (s >= 10) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(jobs) + " compute runs in " + std::to_string(s) + " s";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t points = 0;
  const auto& ideals = corpus::oracle_ideals();
  int redundant = 0, squared = 0;
  for (const auto& [name, I] : ideals) {
    redundant += name.rfind("redundant", 0) == 0;
    squared += name.rfind("squared", 0) == 0;
    const int k = I.ring().size();
    const auto table = cohomology_table(I);
    std::vector<GradedModule> h;
    for (int i = 0; i <= k; ++i) h.push_back(local_cohomology(I, table, i));
    CechOracle oracle(I);
    Multidegree a{std::vector<Degree>(k, -4)};
    while (true) {
      ++points;
      const auto& dims = oracle.dims(a);
      for (int i = 0; i <= k; ++i) {
        const std::size_t ref = i < static_cast<int>(dims.size()) ? dims[i] : 0;
        if (module_fine_dim(h[i], a) != ref)
          o.fail(name + " i=" + std::to_string(i) + " a=" + to_string(a));
      }
      int j = 0;
      while (j < k && a[j] == 4) a[j++] = -4;
      if (j == k) break;
      ++a[j];
    }
  }
  const double s = seconds_since(t0);
  if (ideals.size() < 50) o.fail("corpus has only " + std::to_string(ideals.size()) + " ideals");
  if (redundant == 0 || squared == 0) o.fail("corpus lacks redundant or non-squarefree variants");
  if (s >= 120) o.fail("took " + std::to_string(s) + " s");
  if (o.pass)
    o.detail = std::to_string(ideals.size()) + " ideals, " + std::to_string(points) + " multidegrees in " +
               std::to_string(s) + " s";
  return o;
}

Outcome mayer_vietoris() {
  Outcome o;
  const auto mv = local_cohomology(corpus::mayer_vietoris_ideal(), 2);
  const auto a = local_cohomology(corpus::ideal(2, 2, "X1, X2"), 2);
  const auto b = local_cohomology(corpus::ideal(2, 2, "Y1, Y2"), 2);
  int points = 0;
  for (const Bidegree d : square_window(6).points()) {
    ++points;
    if (!(module_dim(mv, d) == module_dim(a, d) + module_dim(b, d))) o.fail("mismatch at " + to_string(d));
  }
  if (o.pass) o.detail = std::to_string(points) + " bidegrees";
  return o;
}

Outcome eulerian() {
  Outcome o;
  std::size_t checked = 0, truncated = 0;
  for (const auto& [name, m] : corpus::modules()) {
    EulerOptions opts;
    opts.max_power = 1;
    opts.exponent_bound = 6 + m.ring().size();
    opts.infinite_sample = 16;
    const auto rep = check_generalized_eulerian(m, square_window(6), opts);
    checked += rep.monomials_checked;
    truncated += rep.truncated;
    if (!rep.passed()) o.fail(name + " at " + to_string(rep.failures.front().position));
  }
  if (o.pass)
    o.detail = std::to_string(corpus::modules().size()) + " modules, " + std::to_string(checked) + " monomials, " +
               std::to_string(truncated) + " with sampled infinite components";
  return o;
}

Outcome rigidity_tameness_vanishing() {
  Outcome o;
  for (const auto& [name, m] : corpus::modules()) {
    const Window w = default_window(m.ring());
    if (!verify_rigidity(m, w).passed()) o.fail("rigidity " + name);
    if (!verify_tameness(m, w).passed()) o.fail("tameness " + name);
    if (!verify_vanishing(m, default_band(m.ring())).passed()) o.fail("vanishing " + name);
  }
  if (o.pass) o.detail = std::to_string(corpus::modules().size()) + " modules";
  return o;
}

Outcome koszul_support() {
  Outcome o;
  int modules = 0;
  for (const auto& [name, m] : corpus::modules()) {
    const RingSpec& r = m.ring();
    if (r.n() != 1 && r.m() != 1) continue;
    ++modules;
    for (const Bidegree d : square_window(6).points()) {
      const KoszulDims zero{0L, 0L};
      if (r.n() == 1) {
        if (d.u != 0 && !(koszul_homology_dims(m, OperatorSymbol::mul_x(1), d) == zero))
          o.fail(name + " X1 at " + to_string(d));
        if (d.u != -1 && !(koszul_homology_dims(m, OperatorSymbol::dx(1), d) == zero))
          o.fail(name + " dX1 at " + to_string(d));
      }
      if (r.m() == 1) {
        if (d.v != 0 && !(koszul_homology_dims(m, OperatorSymbol::mul_y(1), d) == zero))
          o.fail(name + " Y1 at " + to_string(d));
        if (d.v != -1 && !(koszul_homology_dims(m, OperatorSymbol::dy(1), d) == zero))
          o.fail(name + " dY1 at " + to_string(d));
      }
    }
  }
  if (o.pass) o.detail = std::to_string(modules) + " modules with n=1 or m=1";
  return o;
}

Outcome hilbert_series_checks() {
  Outcome o;
  const auto k3 = render_series(special_module("binomial_edge_K3").module, false).text;
  if (k3 != "t1^-3 * t2^-3 / ((1-t1^-1)^3 (1-t2^-1)^3)") o.fail("K3 series '" + k3 + "'");
  const auto mv = render_series(local_cohomology(corpus::mayer_vietoris_ideal(), 2), true).text;
  if (mv != "2 / ((1-t1)^2 (1-t2)^2)") o.fail("normalized series '" + mv + "'");
  int modules = 0;
  for (const auto& [name, m] : corpus::modules()) {
    if (m.has_laurent()) continue;
    ++modules;
    for (const auto& [d, c] : eval_series_window(hilbert_series(m), square_window(8)))
      if (!(c == module_dim(m, d))) o.fail(name + " at " + to_string(d));
  }
  if (o.pass) o.detail = "both strings exact, " + std::to_string(modules) + " Laurent-free modules on [-8,8]^2";
  return o;
}

Outcome dimension_polynomials() {
  Outcome o;
  std::size_t points = 0;
  int refused = 0;
  for (const auto& [name, m] : corpus::modules())
    for (const auto q : {Quadrant::NE, Quadrant::NWstar, Quadrant::SstarWstar, Quadrant::SstarE}) {
      const Window w = square_window(9);
      bool infinite = false;
      for (const Bidegree d : w.points())
        if (deep_in_quadrant(m.ring(), q, d) && module_dim(m, d).is_infinite()) infinite = true;
      try {
        const auto p = dimension_polynomial(m, q);
        if (infinite) o.fail(name + " " + to_string(q) + " has infinite dims but got a polynomial");
        for (const Bidegree d : w.points())
          if (deep_in_quadrant(m.ring(), q, d)) {
            ++points;
            if (!(ExtendedCount(p.evaluate(d)) == module_dim(m, d))) o.fail(name + " " + to_string(q) + " at " + to_string(d));
          }
      } catch (const InfiniteDimensionError&) {
        ++refused;
        if (!infinite) o.fail(name + " " + to_string(q) + " refused with finite dims");
      }
    }
  // E-box on S*W*: counting gives C(-u-1,n-1) C(-v-1,m-1). The alternative
  // corner formula would give 5 rather than 1 at n = 2, u = -2.
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      const RingSpec r(n, m);
      const GradedModule e(r, {{BoxModule::all(r, SupportState::NegOnly), 1}});
      const auto p = dimension_polynomial(e, Quadrant::SstarWstar);
      for (Degree u = -9; u <= -n; ++u)
        for (Degree v = -9; v <= -m; ++v)
          if (p.evaluate({u, v}) != binomial(Integer(-u - 1), n - 1) * binomial(Integer(-v - 1), m - 1))
            o.fail("E-box polynomial at " + to_string(Bidegree{u, v}));
    }
  {
    const RingSpec r(2, 2);
    const GradedModule e(r, {{BoxModule::all(r, SupportState::NegOnly), 1}});
    const Integer table = binomial(Integer(2 + 2 + 2 - 1), 1);
    if (!(module_dim(e, {-2, -2}) == ExtendedCount(1L)) || table != 5)
      o.fail("corner table comparison at n=2, u=-2");
  }
  if (o.pass)
    o.detail = std::to_string(points) + " deep points, " + std::to_string(refused) +
               " quadrants refused as infinite; alternative corner formula gives 5 where counting gives 1 (n=2, u=-2)";
  return o;
}

Outcome localization() {
  Outcome o;
  const auto a = corpus::ideal(2, 2, "X1, X2");
  const auto loc = localize(local_cohomology(a, 2), parse_monomial(a.ring(), "Y1"));
  for (const Bidegree d : square_window(6).points()) {
    // X1^-1 X2^-1 K[X1^-1, X2^-1, Y1^+-1, Y2]: u <= -2 in X, every v in Y
    const bool expect_inf = d.u <= -2;
    const auto c = module_dim(loc, d);
    if (expect_inf ? !c.is_infinite() : !c.is_zero()) o.fail("dim " + to_string(c) + " at " + to_string(d));
  }
  const auto labels = render_labels(classify_support(loc).labels);
  if (labels != "W*") o.fail("region " + labels);
  EulerOptions opts;
  opts.max_power = 1;
  opts.exponent_bound = 10;
  opts.infinite_sample = 16;
  const auto rep = check_generalized_eulerian(loc, square_window(6), opts);
  if (!rep.passed()) o.fail("Eulerian failure");
  if (o.pass) o.detail = "inf exactly on u<=-2, region W*, " + std::to_string(rep.monomials_checked) + " monomials";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"closed-form corpus", closed_form_corpus},
      {"oracle equivalence", oracle_equivalence},
      {"Mayer-Vietoris window sum", mayer_vietoris},
      {"Eulerian suite", eulerian},
      {"rigidity, tameness and vanishing", rigidity_tameness_vanishing},
      {"Koszul support constraints", koszul_support},
      {"Hilbert series", hilbert_series_checks},
      {"dimension polynomials", dimension_polynomials},
      {"localization", localization},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << " " << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
