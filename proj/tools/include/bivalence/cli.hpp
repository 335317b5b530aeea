#ifndef BIVALENCE_CLI_HPP
#define BIVALENCE_CLI_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bivalence/lattice.hpp"

namespace bivalence::cli {

enum class Format { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Outcome of one command. `body` and `payload` carry the same facts; the
/// payload mirrors the body field by field.
struct Report {
  std::string verdict;
  std::string body;
  nlohmann::ordered_json payload;
  int exit_code = kExitOk;
  Format format = Format::Text;
};

/// Runs one command line (without the program name). Never throws: bad input
/// becomes a report with exit code 2 and a one-line message.
Report dispatch(const std::vector<std::string>& args);

/// Text: verdict line then body. Json: the payload, two-space indented.
std::string render(const Report& report);

/// `builtin:<family>:<n>` or a path to a lattice file.
LatticeSpec resolve_lattice_spec(std::string_view source);
Lattice resolve_lattice(std::string_view source);

} // namespace bivalence::cli

#endif // BIVALENCE_CLI_HPP
