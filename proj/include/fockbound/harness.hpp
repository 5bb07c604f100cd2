#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fockbound/action.hpp"
#include "fockbound/claims.hpp"
#include "fockbound/config.hpp"
#include "fockbound/report.hpp"
#include "fockbound/words.hpp"

namespace fockbound {

// Knobs for one verification run. Precedence, lowest to highest:
// built-in defaults, FOCKBOUND_* environment variables, the config file,
// command-line flags.
struct SuiteConfig {
  std::string action_path;  // empty = built-in Z-on-Z action
  GroupDescriptor delta{GroupKind::FreeAbelian, 1, {}};  // wreath letters
  std::int64_t truncation = 4;
  std::int64_t gamma_radius = 2;
  std::int64_t samples = 2000;
  std::int64_t shell_max = 5;
  std::uint64_t seed = 20240801;
  std::string out_dir = "reports";

  void validate() const;
};

SuiteConfig default_suite_config();
void apply_environment(SuiteConfig& cfg);
void apply_config_file(SuiteConfig& cfg, const KeyValueFile& kv);

ActionDescriptor builtin_action();
Action load_action(const SuiteConfig& cfg);

// Runs one named suite (full, sym, anti, or wreath) into the sink.
void run_named_suite(const std::string& suite, const SuiteConfig& cfg,
                     const Action& action, ReportSink& sink, std::ostream& log);

// Runs the requested suites, writes reports, returns the exit status
// (0 iff no violations anywhere).
int run_suites(const std::vector<std::string>& suites, const SuiteConfig& cfg,
               std::ostream& log);

struct ClaimRow {
  std::string id;
  std::string anchor;
  std::string suites;
};
std::vector<ClaimRow> list_claims();

}  // namespace fockbound
