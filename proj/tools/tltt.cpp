#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tltt/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Typechecker for a two-level type theory"};
  app.require_subcommand(1);

  tltt::RunConfig cfg;
  std::string format = "human";
  std::size_t budget = 0;

  CLI::App* check = app.add_subcommand("check", "Check .2lt files in order");
  check->add_flag("--strong", cfg.strong_mode,
                  "Identify strict and fibrant Nat, Empty and sums");
  check->add_flag("--strict-proof-irrelevance", cfg.strict_proof_irrelevance,
                  "Identify all proofs of a strict equality");
  check->add_flag("--trace", cfg.trace, "Log each item to stderr as it is checked");
  check->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "lines"}));
  auto* budget_opt =
      check->add_option("--unfold-budget", budget, "Maximum definition unfoldings per item");
  check->add_option("files", cfg.files, "Input files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "lines" ? tltt::OutputFormat::Lines : tltt::OutputFormat::Human;
  if (budget_opt->count() > 0) cfg.unfold_budget = budget;

  try {
    tltt::RunReport report = tltt::run(cfg);
    return tltt::emit_report(report, cfg.format, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
