#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "relweyl/commands.hpp"

using namespace relweyl;

int main(int argc, char** argv) {
  CLI::App app{"Exact relative longest Weyl elements and normalization factors for exceptional root systems"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config, data_dir, out_dir;
  unsigned jobs = 0;
  app.add_option("--config", config, "JSON config with out_dir / jobs / data_dir");
  app.add_option("--data", data_dir, "golden table directory");
  app.add_option("--out", out_dir, "write outputs into this directory");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u));

  std::string type, removed, action_format, decompose_format, norm_format, ways, nu_i = "trivial", only;
  int way = 0;

  auto* show = app.add_subcommand("show", "print a root system");
  show->add_option("type", type, "G2, F4, E6, E7 or E8")->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl group tools");
  weyl->require_subcommand(1);
  auto* action = weyl->add_subcommand("action-table", "w0^{-1} on the simple roots");
  action->add_option("type", type)->required();
  action->add_option("--removed,-r", removed)->required();
  action->add_option("--format,-f", action_format, "csv|json|latex|table")->default_val("csv");

  auto* decompose = app.add_subcommand("decompose", "run the decomposition for one Way");
  decompose->add_option("type", type)->required();
  decompose->add_option("--removed,-r", removed)->required();
  decompose->add_option("--way,-w", way)->required()->check(CLI::PositiveNumber);
  decompose->add_option("--format,-f", decompose_format, "json|table")->default_val("table");

  auto* normtable = app.add_subcommand("normtable", "s and 1-s terms for a removed root");
  normtable->add_option("type", type)->required();
  normtable->add_option("--removed,-r", removed)->required();
  normtable->add_option("--format,-f", norm_format, "csv|json|latex|table")->default_val("csv");

  auto* verify = app.add_subcommand("verify", "gcd-of-discrepancies check over a Way list");
  verify->add_option("type", type)->required();
  verify->add_option("--removed,-r", removed)->required();
  verify->add_option("--way,--ways,-w", ways, "comma-separated Ways")->required();
  verify->add_option("--nu-i", nu_i, "trivial (nu_I o alpha^vee = 1) or nontrivial")
      ->check(CLI::IsMember({"trivial", "nontrivial"}))
      ->default_val("trivial");

  auto* reproduce = app.add_subcommand("reproduce-all", "recompute and diff every golden table");
  reproduce->add_option("--only", only, "restrict to one type");

  auto* claims = app.add_subcommand("verify-paper-claims", "check every published verdict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    auto settings = load_settings(config.empty() ? std::nullopt : std::optional<std::filesystem::path>(config));
    if (!data_dir.empty()) settings.data_dir = data_dir;
    if (!out_dir.empty()) settings.out_dir = std::filesystem::path(out_dir);
    if (jobs > 0) settings.jobs = jobs;

    if (*show) return cmd_show(type, std::cout);
    if (*action) return cmd_action_table(settings, type, removed, parse_format(action_format), std::cout);
    if (*decompose) return cmd_decompose(settings, type, removed, way, parse_format(decompose_format), std::cout);
    if (*normtable) return cmd_normtable(settings, type, removed, parse_format(norm_format), std::cout);
    if (*verify) {
      auto branch = nu_i == "trivial" ? ImaginaryBranch::Trivial : ImaginaryBranch::NonTrivial;
      return cmd_verify(settings, type, removed, parse_ways(ways), branch, std::cout);
    }
    if (*reproduce) {
      std::optional<TypeLabel> filter;
      if (!only.empty()) filter = parse_type(only);
      return cmd_reproduce_all(settings, filter, std::cout);
    }
    if (*claims) return cmd_verify_paper_claims(settings, std::cout);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
