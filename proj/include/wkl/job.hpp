#pragma once

#include "wkl/root_system.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wkl {

// Bad user input; the CLI maps it to exit status 1.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerify = 2;
inline constexpr int kMaxTranscendentals = 4;

struct JobSpec {
  char type_letter = 'A';
  int rank = 1;
  std::vector<int> theta;
  Weight lambda;
  std::string command = "info";  // info | cosets | klpolys | characters | verify
  std::string format = "text";   // text | json | latex
  bool invert = false;
  bool verma = false;
  int max_rank = RootSystem::kMaxRank;
};

// "A3", "E6", "G2".
std::pair<char, int> parse_type(std::string_view text);
// Comma-separated simple roots by Greek letter, ASCII name (alpha, a) or 0-based index.
std::vector<int> parse_theta(std::string_view text, int rank);
// Comma-separated coroot values, each a sum of rationals and rational
// multiples of t1..t4. Errors carry the character position.
Weight parse_lambda(std::string_view text);

// Runs one command; diagnostics go to err. Returns the exit status.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

}  // namespace wkl
