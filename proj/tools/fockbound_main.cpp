#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockbound/fock.hpp"
#include "fockbound/harness.hpp"
#include "fockbound/serialize.hpp"

using namespace fockbound;

int main(int argc, char** argv) {
  CLI::App app{"fockbound: exact verification of Fock-space boundary estimates"};
  app.require_subcommand(1);

  // verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites{"full", "sym", "anti", "wreath"};
  std::string config_path;
  std::string action_path, out_dir;
  std::int64_t samples = -1, shell_max = -1, truncation = -1, gamma = -1;
  std::int64_t seed = -1;
  verify->add_option("--suite", suites, "suites to run (full sym anti wreath)");
  verify->add_option("--config", config_path, "suite config file");
  verify->add_option("--action", action_path, "action config file");
  verify->add_option("--samples", samples, "samples per verifier family");
  verify->add_option("--shell-max", shell_max, "largest exactly enumerated shell");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--truncation", truncation, "Fock truncation level N");
  verify->add_option("--gamma-ball", gamma, "group ball radius R");
  verify->add_option("--out", out_dir, "report output directory");

  // list-claims ---------------------------------------------------------
  auto* list = app.add_subcommand("list-claims", "print the claim registry");

  // export-operator -----------------------------------------------------
  auto* exp = app.add_subcommand("export-operator",
                                 "print a creation operator in text form");
  std::string label_text, variant_name_arg = "sym", exp_action, side_arg = "l";
  std::int64_t exp_truncation = 4;
  exp->add_option("--label", label_text, "operator label word")->required();
  exp->add_option("--variant", variant_name_arg, "full | sym | anti");
  exp->add_option("--truncation", exp_truncation, "truncation level N");
  exp->add_option("--side", side_arg, "l (left) or r (right)");
  exp->add_option("--action", exp_action, "action config file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (const auto& row : list_claims())
        std::cout << row.id << "\t[" << row.suites << "]\t" << row.anchor << "\n";
      return 0;
    }

    if (exp->parsed()) {
      SuiteConfig cfg = default_suite_config();
      apply_environment(cfg);
      cfg.action_path = exp_action;
      Action action = load_action(cfg);
      const Variant variant = variant_from_name(variant_name_arg);
      TupleWord label;
      if (variant == Variant::Full)
        label = tuple_from_text(action, label_text);
      else
        label = section(multiset_from_text(action, label_text));
      FockSpace space(action, variant, exp_truncation, action.ball(exp_truncation));
      const Side side = side_arg == "r" ? Side::Right : Side::Left;
      auto op = creation_operator(space, side, label);
      std::cout << export_operator_text(
          space, op, (side == Side::Left ? "l(" : "r(") + label_text + ")");
      return 0;
    }

    SuiteConfig cfg = default_suite_config();
    apply_environment(cfg);
    if (!config_path.empty())
      apply_config_file(cfg, KeyValueFile::parse_file(config_path));
    if (!action_path.empty()) cfg.action_path = action_path;
    if (samples >= 0) cfg.samples = samples;
    if (shell_max >= 0) cfg.shell_max = shell_max;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (truncation >= 0) cfg.truncation = truncation;
    if (gamma >= 0) cfg.gamma_radius = gamma;
    if (!out_dir.empty()) cfg.out_dir = out_dir;

    int status = run_suites(suites, cfg, std::cout);
    std::cout << (status == 0 ? "all claims hold\n" : "violations found\n");
    return status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
