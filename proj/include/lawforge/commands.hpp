#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lawforge {

// Exit codes shared by every subcommand: 0 success (unsupported instances
// included), 1 law failure / comparator disagreement / unsupported functor
// occurrence, 2 usage or parse errors.

struct RepOptions {
  std::optional<std::string> file;
  std::string type;
  std::vector<std::string> args;
  bool rep1 = false;
};

struct CheckOptions {
  std::optional<std::string> file;
  std::optional<std::string> type;  // absent: every declaration
  std::vector<std::string> args;
  std::string concept_text = "all";  // eq|ord|semigroup|monoid|functor|iso|all
  int depth = 3;
  std::optional<std::string> int_domain;  // inclusive "a..b"
  bool include_nan = false;
  std::uint64_t max_cases = 200000;
  std::optional<std::string> json_path;
  int workers = 1;
};

struct BenchOptions {
  std::optional<std::string> file;
  std::string type;
  std::vector<std::string> args;
  std::string concept_text = "ord";  // eq|ord
  std::uint64_t n = 10000;
  std::uint64_t seed = 0;
};

int cmd_parse(const std::string& file, std::ostream& out, std::ostream& err);
int cmd_rep(const RepOptions& opt, std::ostream& out, std::ostream& err);
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_cases(const std::string& law, int constructors, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace lawforge
