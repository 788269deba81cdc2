#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "toresolve/json_io.hpp"

namespace toresolve {

enum class Command { classify, hilbert, resolve2d, resolve3d, render };

std::optional<Command> parse_command(const std::string& name);
const char* to_string(Command c);

struct JobSpec {
  Command command = Command::classify;
  std::string input;
  std::string output;
  std::optional<std::string> svg;
  /// A completion index, or "all".
  std::optional<std::string> completion;
  std::optional<unsigned> degree_bound;
  unsigned scale = 40;  // pixels per lattice unit in SVG output
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int domain_error = 1;
inline constexpr int parse_error = 2;
inline constexpr int internal_error = 3;
}  // namespace exit_code

/// The report for a parsed document, without touching the filesystem.
/// Throws ParseError or toric::DomainError.
json report(const JobSpec& spec, const InputDocument& doc);

/// Reads spec.input, writes spec.output (and spec.svg); diagnostics go to err.
int run(const JobSpec& spec, std::ostream& err);

}  // namespace toresolve
