#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relweyl/golden.hpp"
#include "relweyl/normalization.hpp"
#include "relweyl/render.hpp"

namespace relweyl {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2 };

inline constexpr const char* kOutDirEnv = "RELWEYL_OUT_DIR";

struct Settings {
  std::filesystem::path data_dir = default_data_dir();
  std::optional<std::filesystem::path> out_dir;  // when set, outputs go to files there
  unsigned jobs = 1;
};

// Optional JSON config {"out_dir": "...", "jobs": n, "data_dir": "..."}; the
// RELWEYL_OUT_DIR environment variable overrides out_dir.
Settings load_settings(const std::optional<std::filesystem::path>& config_file);

std::vector<int> parse_ways(std::string_view text);  // "1,3" -> {1, 3}

int cmd_show(std::string_view type, std::ostream& out);
int cmd_action_table(const Settings& s, std::string_view type, std::string_view removed, Format f, std::ostream& out);
int cmd_decompose(const Settings& s, std::string_view type, std::string_view removed, int way, Format f,
                  std::ostream& out);
int cmd_normtable(const Settings& s, std::string_view type, std::string_view removed, Format f, std::ostream& out);
// Exit 0 only for HOLOMORPHIC_VERIFIED.
int cmd_verify(const Settings& s, std::string_view type, std::string_view removed, const std::vector<int>& ways,
               ImaginaryBranch branch, std::ostream& out);
int cmd_reproduce_all(const Settings& s, std::optional<TypeLabel> only, std::ostream& out);

struct ClaimOutcome {
  PublishedClaim claim;
  VerificationReport report;
  bool matches = false;
};

std::vector<ClaimOutcome> evaluate_claims(unsigned jobs);
int cmd_verify_paper_claims(const Settings& s, std::ostream& out);

}  // namespace relweyl
