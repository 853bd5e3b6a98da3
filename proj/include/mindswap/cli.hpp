#ifndef MINDSWAP_CLI_HPP
#define MINDSWAP_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mindswap/perm.hpp"

namespace mindswap::cli
{

// Stable process exit codes.
enum ExitCode : int
{
  kOk = 0,
  kUsage = 1,
  kViolation = 2,
  kBudget = 3,
};

struct LogRecord
{
  Transposition pair;
  std::size_t line;  // 1-based line in the source text
};

// Swap log: one "a b" pair per line, '#' starts a comment, blank lines are
// skipped. Throws ParseError naming the line.
std::vector<LogRecord> parse_swap_log(std::string_view text);

SwapSequence to_sequence(std::vector<LogRecord> const &records);

// Plans may also be given as the JSON object printed by `plan --json`.
std::vector<LogRecord> parse_plan_text(std::string_view text);

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace mindswap::cli

#endif // MINDSWAP_CLI_HPP
