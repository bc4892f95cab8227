#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "seplat/errors.hpp"
#include "seplat/separated.hpp"

namespace seplat {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitCap = 3 };

struct CommandOptions {
  std::size_t cap = kDefaultCap;
  bool json = false;
  bool expect_violations = false;
  bool timing = false;
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

enum class CheckStatus { ok, violated, skipped };
std::string to_string(CheckStatus s);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::size_t witness_count = 0;
  std::vector<std::string> witnesses;  // rendered, first witness first
  std::string detail;
};

struct CheckReport {
  std::string subject;
  std::string kind;
  std::size_t states = 0;
  std::size_t elements = 0;
  std::size_t atoms = 0;
  std::optional<FamilyHistogram> families;
  std::optional<std::size_t> superselected_pairs;
  std::optional<std::size_t> superselected_nonorthogonal;
  std::vector<CheckEntry> checks;
  std::vector<std::string> notes;
  std::optional<double> seconds;

  bool any_violated() const;
};

std::string render_text(const CheckReport& r);
nlohmann::ordered_json to_json(const CheckReport& r);

/// Exit code for a finished scan, honouring --expect-violations.
int verdict(bool violated, const CommandOptions& opts);

// Each command takes the space-file text and never throws: parse and
// validation problems map to kExitUsage, an exceeded cap to kExitCap.
CommandResult cmd_check(std::string_view text, const CommandOptions& opts);
CommandResult cmd_lattice(std::string_view text, const CommandOptions& opts);
CommandResult cmd_sasaki(std::string_view text, const CommandOptions& opts);
CommandResult cmd_hasse(std::string_view text, const CommandOptions& opts);
CommandResult cmd_coproduct(std::string_view text, const CommandOptions& opts);
CommandResult cmd_oracle(std::size_t m, std::size_t n, const CommandOptions& opts);
/// Randomized product regularity run: exit 0 iff every product of two
/// random Sasaki-regular T1 nontrivial spaces is irregular.
CommandResult cmd_sasaki_random(std::uint64_t seed, std::size_t trials, std::size_t max_states,
                                const CommandOptions& opts);

}  // namespace seplat
