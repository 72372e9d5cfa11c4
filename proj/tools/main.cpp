// argdyn: argumentation-framework dynamics on the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "argdyn/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in)
    throw argdyn::ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abstract argumentation dynamics: extensions, change "
               "classification, sufficient/necessary conditions."};
  app.require_subcommand(1);

  std::string input;
  std::string semantics_name = "grounded";
  std::string change_spec;
  std::string target;
  std::string whatif_name = "z";
  std::size_t budget = 1;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  std::size_t max_arguments = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "framework file (APX-style), or - for stdin")
        ->required();
  };
  auto add_semantics = [&](CLI::App* cmd) {
    cmd->add_option("--semantics", semantics_name,
                    "grounded | preferred | stable")
        ->capture_default_str();
  };
  auto add_change = [&](CLI::App* cmd) {
    cmd->add_option("--change", change_spec,
                    "add-att:x>y | del-att:x>y | del-arg:z | add-arg:z:SPEC")
        ->required();
  };

  CLI::App* extensions = app.add_subcommand(
      "extensions", "compute the extensions of a framework");
  add_input(extensions);
  add_semantics(extensions);

  CLI::App* classify = app.add_subcommand(
      "classify", "apply a change and classify it");
  add_input(classify);
  add_semantics(classify);
  add_change(classify);

  CLI::App* conditions = app.add_subcommand(
      "conditions",
      "evaluate sufficient/necessary conditions for an add-argument change");
  add_input(conditions);
  add_semantics(conditions);
  add_change(conditions);

  CLI::App* whatif = app.add_subcommand(
      "whatif", "search add-argument changes achieving a target property");
  add_input(whatif);
  add_semantics(whatif);
  whatif->add_option("--target", target,
                     "structural label or status flag to achieve")
      ->required();
  whatif->add_option("--budget", budget, "max interaction-set size")
      ->capture_default_str();
  whatif->add_option("--arg", whatif_name, "name of the hypothetical argument")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "run the randomized proposition suite");
  verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  verify->add_option("--count", count, "instance count");
  verify->add_option("--max-arguments", max_arguments,
                     "largest generated framework");

  CLI::App* oracle_check = app.add_subcommand(
      "oracle-check", "engine vs brute-force oracle equivalence");
  oracle_check->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  oracle_check->add_option("--count", count, "instance count");
  oracle_check->add_option("--max-arguments", max_arguments,
                           "largest generated framework");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    using namespace argdyn;

    if (verify->parsed()) {
      VerifyOptions opts;
      opts.seed = seed;
      if (count)
        opts.count = count;
      if (max_arguments)
        opts.max_arguments = max_arguments;
      VerifySummary summary = run_verify(opts);
      std::cout << report_verify(summary, opts);
      return summary.violations.empty() ? 0 : 1;
    }
    if (oracle_check->parsed()) {
      OracleCheckOptions opts;
      opts.seed = seed;
      if (count)
        opts.count = count;
      if (max_arguments)
        opts.max_arguments = max_arguments;
      OracleCheckSummary summary = run_oracle_check(opts);
      std::cout << report_oracle_check(summary, opts);
      return summary.mismatches.empty() ? 0 : 1;
    }

    Framework f = parse_framework(read_input(input));
    SemanticsKind k = semantics_from_string(semantics_name);

    if (extensions->parsed()) {
      std::cout << report_extensions(f, k);
      return 0;
    }
    if (classify->parsed()) {
      std::cout << report_classify(f, parse_change(change_spec), k);
      return 0;
    }
    if (conditions->parsed()) {
      std::string report = report_conditions(f, parse_change(change_spec), k);
      std::cout << report;
      return report.find("consistency: ok") != std::string::npos ? 0 : 1;
    }
    // whatif
    WhatIfOptions opts{ArgumentId(whatif_name), target, budget};
    std::cout << report_whatif(f, k, opts);
    return 0;
  } catch (const argdyn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const argdyn::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
