#include "bilc/cli.hpp"

#include "bilc/hilbert.hpp"
#include "bilc/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

namespace bilc {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct RawLine {
  int line;
  std::string value;
};

}  // namespace

JobConfig parse_config(std::string_view text) {
  static const std::vector<std::string> keys = {"ring", "ideal", "special", "box", "localize", "window"};
  std::map<std::string, std::vector<RawLine>> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ConfigError(number, "expected 'key: value'");
    const std::string key = trim(line.substr(0, colon));
    if (std::ranges::find(keys, key) == keys.end()) throw ConfigError(number, "unknown key '" + key + "'");
    auto& slot = raw[key];
    if (key != "box" && !slot.empty())
      throw ConfigError(number, "duplicate key '" + key + "' (first on line " + std::to_string(slot.front().line) + ")");
    slot.push_back({number, trim(line.substr(colon + 1))});
  }

  JobConfig config;
  if (raw.contains("ring")) {
    const auto& r = raw["ring"].front();
    static const std::regex re(R"(^n\s*=\s*(\d+)\s+m\s*=\s*(\d+)$)");
    std::smatch mt;
    if (!std::regex_match(r.value, mt, re)) throw ConfigError(r.line, "expected 'ring: n=<int> m=<int>'");
    try {
      config.ring = RingSpec(std::stoi(mt[1].str()), std::stoi(mt[2].str()));
    } catch (const std::exception& e) {
      throw ConfigError(r.line, e.what());
    }
  }

  const int sources = raw.contains("ideal") + raw.contains("special") + raw.contains("box");
  if (sources != 1) throw ConfigError(0, "exactly one of 'ideal', 'special' or 'box' is required");

  if (raw.contains("special")) {
    const auto& s = raw["special"].front();
    try {
      const auto& entry = special_module(s.value);
      if (config.ring && !(*config.ring == entry.ring))
        throw ConfigError(s.line, "registered module lives over n=" + std::to_string(entry.ring.n()) +
                                      " m=" + std::to_string(entry.ring.m()));
    } catch (const LookupError& e) {
      throw ConfigError(s.line, e.what());
    }
    config.special = s.value;
  }

  const auto need_ring = [&](const RawLine& r) -> const RingSpec& {
    if (!config.ring && !config.special) throw ConfigError(r.line, "a 'ring:' line is required");
    if (!config.ring) config.ring = special_module(*config.special).ring;
    return *config.ring;
  };

  if (raw.contains("ideal")) {
    const auto& r = raw["ideal"].front();
    try {
      config.ideal = parse_ideal(need_ring(r), r.value);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(r.line, e.what());
    }
  }
  if (raw.contains("box")) {
    for (const auto& r : raw["box"]) {
      try {
        config.boxes.push_back(parse_summand(need_ring(r), r.value));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        throw ConfigError(r.line, e.what());
      }
    }
  }
  if (raw.contains("localize")) {
    const auto& r = raw["localize"].front();
    try {
      const bool implicit_ring = !config.ring;
      config.localize = parse_monomial(need_ring(r), r.value);
      if (implicit_ring) config.ring.reset();
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(r.line, e.what());
    }
  }
  if (raw.contains("window")) {
    const auto& r = raw["window"].front();
    std::istringstream ws(r.value);
    Window w;
    std::string extra;
    if (!(ws >> w.umin >> w.umax >> w.vmin >> w.vmax) || (ws >> extra))
      throw ConfigError(r.line, "expected 'window: umin umax vmin vmax'");
    if (w.umin > w.umax || w.vmin > w.vmax) throw ConfigError(r.line, "window bounds are not ordered");
    config.window = w;
  }
  return config;
}

std::string render_config(const JobConfig& config) {
  std::string s;
  if (config.ring) s += "ring: n=" + std::to_string(config.ring->n()) + " m=" + std::to_string(config.ring->m()) + "\n";
  if (config.ideal) s += "ideal: " + render_ideal(*config.ideal) + "\n";
  if (config.special) s += "special: " + *config.special + "\n";
  for (const auto& b : config.boxes) s += "box: " + format_summand(b) + "\n";
  if (config.localize) s += "localize: " + render_monomial(config_ring(config), *config.localize) + "\n";
  if (config.window) {
    const auto& w = *config.window;
    s += "window: " + std::to_string(w.umin) + " " + std::to_string(w.umax) + " " + std::to_string(w.vmin) + " " +
         std::to_string(w.vmax) + "\n";
  }
  return s;
}

RingSpec config_ring(const JobConfig& config) {
  if (config.ring) return *config.ring;
  if (config.special) return special_module(*config.special).ring;
  throw ConfigError(0, "no ring configured");
}

Window config_window(const JobConfig& config) {
  return config.window ? *config.window : default_window(config_ring(config));
}

namespace {

GradedModule localized(const JobConfig& config, GradedModule m) {
  return config.localize ? localize(m, *config.localize) : m;
}

}  // namespace

GradedModule job_module(const JobConfig& config, std::optional<int> degree) {
  const RingSpec ring = config_ring(config);
  if (config.ideal) {
    if (!degree) throw ConfigError(0, "--degree is required for an ideal");
    if (*degree < 0 || *degree > ring.size())
      throw ConfigError(0, "degree " + std::to_string(*degree) + " outside 0.." + std::to_string(ring.size()));
    return localized(config, local_cohomology(*config.ideal, *degree));
  }
  if (config.special) {
    const auto& entry = special_module(*config.special);
    if (degree && *degree != entry.degree)
      throw ConfigError(0, "'" + entry.name + "' is registered in degree " + std::to_string(entry.degree) + " only");
    return localized(config, entry.module);
  }
  if (degree) throw ConfigError(0, "--degree does not apply to explicit boxes");
  return localized(config, GradedModule(ring, config.boxes));
}

std::vector<LabeledModule> job_modules(const JobConfig& config) {
  std::vector<LabeledModule> out;
  if (config.ideal) {
    const auto table = cohomology_table(*config.ideal);
    for (int i = 0; i <= config.ideal->ring().size(); ++i)
      out.push_back({"H^" + std::to_string(i), localized(config, local_cohomology(*config.ideal, table, i))});
  } else if (config.special) {
    const auto& entry = special_module(*config.special);
    out.push_back({"H^" + std::to_string(entry.degree), localized(config, entry.module)});
  } else {
    out.push_back({"module", job_module(config, std::nullopt)});
  }
  return out;
}

std::string describe_module(const GradedModule& m) {
  if (m.is_zero()) return "ZERO MODULE\n";
  const auto cls = classify_support(m);
  std::string s;
  for (std::size_t i = 0; i < m.summands().size(); ++i) {
    const auto& sm = m.summands()[i];
    s += format_states(sm.box);
    if (sm.box.shift() != Bidegree{}) s += " shift=" + to_string(sm.box.shift());
    s += " mult=" + sm.multiplicity.str();
    const auto& labels = cls.summands[i].labels;
    s += " region=" + (labels.empty() ? std::string("irregular") : render_labels(labels)) + "\n";
  }
  return s;
}

std::string window_table(const GradedModule& m, const Window& w) {
  std::string s = "u\tv\tdim\n";
  for (const Bidegree d : w.points())
    s += std::to_string(d.u) + "\t" + std::to_string(d.v) + "\t" + to_string(module_dim(m, d)) + "\n";
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"eulerian", "rigidity", "tameness", "vanishing",
                                                 "oracle",   "series",   "all"};
  return names;
}

namespace {

Degree default_exponent_bound(const RingSpec& ring, const Window& w) {
  const Degree reach = std::max({std::abs(w.umin), std::abs(w.umax), std::abs(w.vmin), std::abs(w.vmax)});
  return reach + ring.n() + ring.m();
}

void eulerian_suite(CheckReport& report, const std::vector<LabeledModule>& modules, const Window& w) {
  for (const auto& [label, m] : modules) {
    EulerOptions opts;
    opts.exponent_bound = default_exponent_bound(m.ring(), w);
    opts.infinite_sample = 16;
    const auto r = check_generalized_eulerian(m, w, opts);
    std::string detail = "monomials=" + std::to_string(r.monomials_checked) +
                         " max_a=" + std::to_string(r.max_exponent_used());
    if (r.truncated) detail += " exponent_bound=" + std::to_string(*opts.exponent_bound) + " sample=16";
    if (!r.passed()) {
      const auto& f = r.failures.front();
      detail = "failures=" + std::to_string(r.failures.size()) + " monomial=" + to_string(f.monomial) +
               " at=" + to_string(f.position) + " side=" + (f.side == EulerSide::X ? "X" : "Y");
    }
    report.add("eulerian " + label, r.passed(), detail);
  }
}

// Largest radius r <= 4 whose cube [-r,r]^k stays below a million points.
Degree oracle_radius(int k) {
  for (Degree r = 4; r > 0; --r) {
    double pts = 1;
    for (int i = 0; i < k; ++i) pts *= static_cast<double>(2 * r + 1);
    if (pts <= 1e6) return r;
  }
  return 0;
}

void oracle_suite(CheckReport& report, const JobConfig& config) {
  if (!config.ideal) {
    report.skip("oracle", "needs an ideal");
    return;
  }
  const MonomialIdeal& ideal = *config.ideal;
  if (ideal.generators().size() > 6) {
    report.skip("oracle", "more than 6 generators");
    return;
  }
  const RingSpec& ring = ideal.ring();
  const auto table = cohomology_table(ideal);
  std::vector<GradedModule> modules;
  for (int i = 0; i <= ring.size(); ++i) modules.push_back(local_cohomology(ideal, table, i));
  CechOracle oracle(ideal);
  const Degree r = oracle_radius(ring.size());
  Multidegree a{std::vector<Degree>(ring.size(), -r)};
  std::size_t count = 0;
  while (true) {
    ++count;
    const auto& h = oracle.dims(a);
    for (int i = 0; i <= ring.size(); ++i) {
      const Integer expected = static_cast<std::size_t>(i) < h.size() ? Integer(h[i]) : Integer(0);
      const Integer got = module_fine_dim(modules[i], a);
      if (got != expected) {
        report.add("oracle", false,
                   "H^" + std::to_string(i) + " at " + to_string(a) + ": pipeline=" + got.str() +
                       " oracle=" + expected.str());
        return;
      }
    }
    std::size_t j = 0;
    while (j < a.size() && a[j] == r) a[j++] = -r;
    if (j == a.size()) break;
    ++a[j];
  }
  report.add("oracle", true, "multidegrees=" + std::to_string(count) + " radius=" + std::to_string(r));
}

void series_suite(CheckReport& report, const std::vector<LabeledModule>& modules, const Window& w) {
  for (const auto& [label, m] : modules) {
    if (m.has_laurent()) {
      report.skip("series " + label, "Laurent states have no rational series");
      continue;
    }
    const auto s = hilbert_series(m);
    const auto table = eval_series_window(s, w);
    std::optional<Bidegree> bad;
    for (const auto& [d, c] : table)
      if (!(c == module_dim(m, d))) {
        bad = d;
        break;
      }
    const Rational points[][2] = {{Rational(1, 3), Rational(2, 5)}, {Rational(-2), Rational(7, 3)}};
    bool rational_ok = true;
    for (const auto& p : points)
      rational_ok = rational_ok && evaluate_quadrant_form(s, p[0], p[1]) == evaluate_normalized_form(s, p[0], p[1]);
    if (bad)
      report.add("series " + label, false, "window mismatch at " + to_string(*bad));
    else if (!rational_ok)
      report.add("series " + label, false, "normalized form differs as a rational function");
    else
      report.add("series " + label, true, "points=" + std::to_string(table.size()));
  }
}

}  // namespace

CheckReport run_suite(const JobConfig& config, std::string_view suite) {
  if (std::ranges::find(suite_names(), suite) == suite_names().end())
    throw ConfigError(0, "unknown suite '" + std::string(suite) + "'");
  const bool all = suite == "all";
  const Window w = config_window(config);
  const auto modules = job_modules(config);
  CheckReport report;
  if (all || suite == "eulerian") eulerian_suite(report, modules, w);
  if (all || suite == "rigidity")
    for (const auto& [label, m] : modules) report.append(verify_rigidity(m, w), label + " ");
  if (all || suite == "tameness")
    for (const auto& [label, m] : modules) report.append(verify_tameness(m, w), label + " ");
  if (all || suite == "vanishing")
    for (const auto& [label, m] : modules) report.append(verify_vanishing(m, default_band(m.ring())), label + " ");
  if (all || suite == "oracle") oracle_suite(report, config);
  if (all || suite == "series") series_suite(report, modules, w);
  return report;
}

namespace {

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(0, path + ": " + e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bigraded local cohomology of monomial ideals", "bilc"};
  app.require_subcommand(1);

  std::string config_path, suite, name;
  std::optional<int> degree;
  bool normalize = false;

  auto* compute = app.add_subcommand("compute", "Print H^i as a sum of boxes");
  auto* window = app.add_subcommand("window", "Print the dimension table over the window");
  auto* series = app.add_subcommand("series", "Print the bigraded Hilbert series");
  auto* check = app.add_subcommand("check", "Run an invariant suite");
  auto* special = app.add_subcommand("special", "Show a registered module");
  for (auto* sub : {compute, window, series, check}) sub->add_option("--config", config_path)->required();
  for (auto* sub : {compute, window, series}) sub->add_option("--degree", degree, "cohomological degree i");
  series->add_flag("--normalize", normalize, "rewrite over (1-t1)^n (1-t2)^m");
  check->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  special->add_option("--name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (special->parsed()) {
      const auto& entry = special_module(name);
      out << "name: " << entry.name << "\n"
          << "ring: n=" << entry.ring.n() << " m=" << entry.ring.m() << "\n"
          << "degree: " << entry.degree << "\n"
          << "provenance: " << entry.provenance << "\n"
          << describe_module(entry.module);
      return 0;
    }
    const JobConfig config = load_config(config_path);
    if (compute->parsed()) {
      out << describe_module(job_module(config, degree));
      return 0;
    }
    if (window->parsed()) {
      out << window_table(job_module(config, degree), config_window(config));
      return 0;
    }
    if (series->parsed()) {
      const auto r = render_series(job_module(config, degree), normalize);
      out << r.text << "\n" << "semantics=" << r.semantics << "\n";
      return 0;
    }
    const auto report = run_suite(config, suite);
    out << render(report);
    return report.passed() ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace bilc
