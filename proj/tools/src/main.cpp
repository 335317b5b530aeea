#include <iostream>

#include "bivalence/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto report = bivalence::cli::dispatch(args);
  auto& out = report.exit_code == bivalence::cli::kExitUsage ? std::cerr : std::cout;
  out << bivalence::cli::render(report);
  return report.exit_code;
}
