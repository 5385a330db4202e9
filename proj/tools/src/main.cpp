#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "classaut/error.hpp"
#include "classaut_cli/commands.hpp"

namespace cli = classaut::cli;

int main(int argc, char** argv) {
  CLI::App app{"classaut: automorphism invariants of small finite groups"};
  app.require_subcommand(1);

  cli::Options opts;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--builtin", opts.builtins, "paper32, paper64, controls or all (comma list)");
    sub->add_option("--catalog", opts.catalog_paths, "catalog file to load")->check(CLI::ExistingFile);
    sub->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    sub->add_option("--max-order", opts.max_order, "largest |G| for class-preserving enumeration")
        ->capture_default_str();
    sub->add_option("--max-cosets", opts.max_cosets, "coset enumeration limit")->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "full report for one group");
  add_common(analyze);
  analyze->add_option("--group", opts.group, "group name")->required();
  analyze->add_option("--check", opts.check, "checks to include (comma list or all)")->capture_default_str();
  analyze->add_flag("--timing", opts.timing, "include duration_ms");

  std::string positional_checks;
  auto* verify = app.add_subcommand("verify", "run theorem checks over catalogs");
  add_common(verify);
  verify->add_option("--group", opts.group, "restrict to one group");
  auto* verify_check =
      verify->add_option("--check", opts.check, "check id, comma list or all")->capture_default_str();
  verify->add_option("checks", positional_checks, "same as --check")->excludes(verify_check);
  verify->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* batch = app.add_subcommand("batch", "full reports for every group");
  add_common(batch);
  batch->add_option("--group", opts.group, "restrict to one group");
  batch->add_option("--check", opts.check, "checks to include (comma list or all)")->capture_default_str();
  batch->add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);
  batch->add_flag("--timing", opts.timing, "include duration_ms");

  auto* homcount = app.add_subcommand("homcount", "count Hom(A, B) for abelian invariants");
  homcount->add_option("--domain", opts.domain, "prime powers, comma separated (may be empty)");
  homcount->add_option("--codomain", opts.codomain, "prime powers, comma separated (may be empty)");
  homcount->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }
  opts.format = cli::parse_format(format);

  if (*analyze) return cli::run_analyze(opts, std::cout, std::cerr);
  if (!positional_checks.empty()) opts.check = positional_checks;
  if (*verify) return cli::run_verify(opts, std::cout, std::cerr);
  if (*batch) return cli::run_batch(opts, std::cout, std::cerr);
  return cli::run_homcount(opts, std::cout, std::cerr);
}
