#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lawforge/commands.hpp"
#include "lawforge/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lawforge: derive Eq/Ord/Semigroup/Monoid/Functor instances "
               "generically over representation types and verify their laws "
               "by bounded-exhaustive checking"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lawforge::kToolVersion));

  std::string parse_file;
  auto* parse_cmd = app.add_subcommand("parse", "Parse and echo an .adt schema file");
  parse_cmd->add_option("file", parse_file, "Input .adt file")->required();

  lawforge::RepOptions rep_opt;
  auto* rep_cmd = app.add_subcommand("rep", "Print the representation shape of a type");
  rep_cmd->add_option("file", rep_opt.file, "Input .adt file");
  rep_cmd->add_option("--type", rep_opt.type, "Type name")->required();
  rep_cmd->add_option("--args", rep_opt.args, "Ground type arguments")->delimiter(',');
  rep_cmd->add_flag("--rep1", rep_opt.rep1, "Print the container shape over the last parameter");

  lawforge::CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "Derive instances and verify their laws");
  check_cmd->add_option("file", check_opt.file, "Input .adt file");
  check_cmd->add_option("--type", check_opt.type, "Type name (default: every declaration)");
  check_cmd->add_option("--args", check_opt.args, "Ground type arguments")->delimiter(',');
  check_cmd->add_option("--concept", check_opt.concept_text,
                        "eq|ord|semigroup|monoid|functor|iso|all");
  check_cmd->add_option("--depth", check_opt.depth, "Max constructor nesting");
  check_cmd->add_option("--int-domain", check_opt.int_domain, "Inclusive int range a..b");
  check_cmd->add_flag("--include-nan", check_opt.include_nan,
                      "Append NaN to the double domain");
  check_cmd->add_option("--max-cases", check_opt.max_cases, "Cap on checked tuples per law");
  check_cmd->add_option("--json", check_opt.json_path, "Write the JSON report document here");
  check_cmd->add_option("--workers", check_opt.workers, "Parallel law-checking workers")
      ->envname("LAWFORGE_WORKERS");

  std::string cases_law;
  int cases_ctors = 0;
  auto* cases_cmd = app.add_subcommand("cases", "Direct-proof case count for a law");
  cases_cmd->add_option("--law", cases_law, "Law name, e.g. OrdAnti")->required();
  cases_cmd->add_option("--constructors", cases_ctors, "Constructor count")->required();

  lawforge::BenchOptions bench_opt;
  auto* bench_cmd =
      app.add_subcommand("bench", "Compare generic vs direct instance throughput");
  bench_cmd->add_option("file", bench_opt.file, "Input .adt file");
  bench_cmd->add_option("--type", bench_opt.type, "Type name")->required();
  bench_cmd->add_option("--args", bench_opt.args, "Ground type arguments")->delimiter(',');
  bench_cmd->add_option("--concept", bench_opt.concept_text, "eq|ord");
  bench_cmd->add_option("--n", bench_opt.n, "Number of value pairs");
  bench_cmd->add_option("--seed", bench_opt.seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*parse_cmd) return lawforge::cmd_parse(parse_file, std::cout, std::cerr);
    if (*rep_cmd) return lawforge::cmd_rep(rep_opt, std::cout, std::cerr);
    if (*check_cmd) return lawforge::cmd_check(check_opt, std::cout, std::cerr);
    if (*cases_cmd) return lawforge::cmd_cases(cases_law, cases_ctors, std::cout, std::cerr);
    if (*bench_cmd) return lawforge::cmd_bench(bench_opt, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
