#pragma once

#include "gcdtn/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gcdtn::cli {

enum class Verb {
  Analyze,
  GcdMatrix,
  LcmMatrix,
  Pow,
  Order,
  Invert,
  Divide,
  PowerDivide,
  Generate,
  Search,
};

enum class Format { Text, Json };

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kVerifyMismatch = 3;

struct Command {
  Verb verb = Verb::Analyze;
  std::string input = "-";
  Format format = Format::Text;
  unsigned long power = 1;
  std::uint64_t seed = 0;
  std::size_t minor_cap = kDefaultMinorCap;
  std::size_t budget = 100'000;
  bool verify = false;
  // generate / search
  std::string pattern = "random";
  std::size_t n = 0;
  std::vector<std::string> primes;
  std::vector<unsigned long> bases;
  unsigned long max_exp = 6;
  std::string bound = "300";
};

/// Result of one command: the structured report plus the exit code.
struct Outcome {
  Json report;
  int exit_code = kOk;
};

/// Runs the verb against an already-parsed ordered set (input verbs) or
/// nothing (generate, search). Library errors propagate.
auto execute(const Command &cmd, const std::optional<OrderedSet> &input) -> Outcome;

/// Full front end: argument parsing, input loading, execution and output.
/// args excludes the program name.
auto run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
         std::ostream &err) -> int;

} // namespace gcdtn::cli
