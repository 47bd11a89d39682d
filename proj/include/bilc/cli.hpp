#ifndef BILC_CLI_HPP
#define BILC_CLI_HPP

#include "bilc/cech.hpp"
#include "bilc/regions.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// Job configuration and the command-line front end.
namespace bilc {

/// Malformed configuration; line() is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
 public:
  ConfigError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Exactly one source: an ideal, a registry name, or explicit boxes.
struct JobConfig {
  std::optional<RingSpec> ring;
  std::optional<MonomialIdeal> ideal;
  std::optional<std::string> special;
  std::vector<Summand> boxes;
  std::optional<Multidegree> localize;
  std::optional<Window> window;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

/// Line format:
///   ring: n=<int> m=<int>
///   ideal: <monomial list>   | special: <name>   | box: <box> (repeatable)
///   localize: <monomial>
///   window: umin umax vmin vmax
/// `#` starts a comment. Throws ConfigError.
JobConfig parse_config(std::string_view text);
std::string render_config(const JobConfig& config);

/// The configured ring, taken from the registry for special jobs.
RingSpec config_ring(const JobConfig& config);
/// The configured window or the default one.
Window config_window(const JobConfig& config);

struct LabeledModule {
  std::string label;
  GradedModule module;
};

/// The module a job denotes in cohomological degree i, localized if asked.
/// Ideal jobs need a degree in 0..n+m; special jobs accept only their
/// registered degree; box jobs take no degree. Throws ConfigError.
GradedModule job_module(const JobConfig& config, std::optional<int> degree);

/// Every module a job denotes: all degrees of an ideal, the registered one
/// of a special entry, or the explicit boxes.
std::vector<LabeledModule> job_modules(const JobConfig& config);

/// `[X1:neg X2:neg Y1:pos Y2:pos] mult=1 region=NW*` per summand, or
/// `ZERO MODULE`. A nonzero twist is printed as shift=(a,b).
std::string describe_module(const GradedModule& m);

/// TSV `u<TAB>v<TAB>dim`, row-major, `inf` for infinite.
std::string window_table(const GradedModule& m, const Window& w);

/// Runs a named suite: eulerian, rigidity, tameness, vanishing, oracle,
/// series, or all.
CheckReport run_suite(const JobConfig& config, std::string_view suite);
const std::vector<std::string>& suite_names();

/// Entry point behind the executable. Exit codes: 0 success, 1 a check
/// failed, 2 usage or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bilc

#endif  // BILC_CLI_HPP
