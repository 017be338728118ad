// kiselman: compute in Kiselman's semigroup K_n, enumerate its endomorphism
// monoid in three isomorphic presentations, and cross-check the counting
// formulas for pattern-avoiding boolean matrices.

#include <exception>
#include <functional>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"
#include "kiselman/counting.hpp"
#include "kiselman/errors.hpp"

using namespace kiselman;
using namespace kiselman::cli;

int main(int argc, char** argv) {
  CLI::App app{"Kiselman semigroup toolkit: elements, endomorphisms, counts"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  app.add_option("-j,--parallelism", cfg.parallelism, "Worker count for partitioned scans")
      ->envname("KISELMAN_PARALLELISM")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timestamp", cfg.no_timestamp, "Omit the generated_at field from JSON output");
  app.add_option("--max-elements", cfg.max_elements, "Element enumeration cap")
      ->envname("KISELMAN_MAX_ELEMENTS")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-rules", cfg.max_rules, "Completion rule cap")
      ->envname("KISELMAN_MAX_RULES")
      ->check(CLI::PositiveNumber);
  CLI::Option* max_bits_opt =
      app.add_option("--max-bits", cfg.guard_bits, "Bit budget m*n for brute-force counting")
          ->envname("KISELMAN_GUARD_BITS")
          ->check(CLI::PositiveNumber);

  const auto add_format = [&](CLI::App* sub, const std::vector<std::string>& choices) {
    sub->fallthrough();  // global options may follow the subcommand
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(choices))
        ->capture_default_str();
    sub->add_option("-o,--output", cfg.output_path, "Write output to a file instead of stdout");
  };

  CLI::App* elements = app.add_subcommand("elements", "List the normal forms of K_n");
  elements->add_option("-n", cfg.n, "Rank of the semigroup")->required()->check(CLI::PositiveNumber);
  elements->add_flag("--idempotents-only", cfg.idempotents_only,
                     "Keep only the 2^n idempotents e_X");
  add_format(elements, {"table", "json", "csv"});

  CLI::App* endos = app.add_subcommand(
      "endos", "List End(K_n) as content tuples, monotone sequences and matrices");
  endos->add_option("-n", cfg.n, "Rank of the semigroup")->required()->check(CLI::PositiveNumber);
  endos->add_option("--method", cfg.method, "Discovery path")
      ->check(CLI::IsMember({"monotone", "brute"}))
      ->capture_default_str();
  add_format(endos, {"table", "json", "csv"});

  CLI::App* count = app.add_subcommand("count", "Closed-formula and brute-force matrix counts");
  count->add_option("-m", cfg.m, "Row count")->check(CLI::PositiveNumber);
  count->add_option("-n", cfg.n, "Column count")->check(CLI::PositiveNumber);
  count->add_flag("--grid", cfg.grid, "Run the full m = 2..5 agreement grid");
  count->add_flag("--brute-only", cfg.brute_only, "Allow rows without a closed formula");
  add_format(count, {"table", "json", "csv"});

  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suites of every module");
  verify->add_option("-n", cfg.n, "Largest rank for the exhaustive suites (default 3)")
      ->check(CLI::Range(1, 5));
  verify->add_option("--suite", cfg.suite, "Only run checks whose id contains this substring");
  add_format(verify, {"table", "json"});

  CLI::App* exp = app.add_subcommand("export", "Write element listings and Cayley tables");
  exp->add_option("-n", cfg.n, "Rank")->required()->check(CLI::PositiveNumber);
  exp->add_option("--what", cfg.what, "kn-table, dn-table, dn-list, endos, elements or rules")
      ->required();
  add_format(exp, {"json", "csv"});

  cfg.n = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  if (cfg.n == 0) {
    // The verify default scale is n = 3; count cells default to m = n = 2.
    cfg.n = app.got_subcommand(verify) ? 3 : 2;
  }
  if (app.got_subcommand(verify) && max_bits_opt->count() == 0) {
    cfg.guard_bits = 20;  // the verify suites' own grid budget
  }

  try {
    if (app.got_subcommand(elements)) return cmd_elements(cfg);
    if (app.got_subcommand(endos)) return cmd_endos(cfg);
    if (app.got_subcommand(count)) return cmd_count(cfg);
    if (app.got_subcommand(verify)) return cmd_verify(cfg);
    if (app.got_subcommand(exp)) return cmd_export(cfg);
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
