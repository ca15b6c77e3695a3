#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cascade/census.hpp"

namespace cascade {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Json, Csv, Text };

std::optional<Format> parse_format(std::string_view text);

struct NRange {
  int lo = 1;
  int hi = 1;
};

/// "5" or "2..7"; nullopt unless 1 <= lo <= hi.
std::optional<NRange> parse_n_range(std::string_view text);

struct RunConfig {
  NRange n;
  int k = 2;
  Format format = Format::Text;
  int threads = 0;
  int oracle_cap = 4;
  bool types_only = false;
  bool skip_full_oracle = false;
  bool coords = false;
};

/// One identity check of `verify`.
struct CheckResult {
  std::string check;
  std::string type;  // support type key, weight or other qualifier; may be empty
  std::string expected;
  std::string got;
  bool pass = false;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct RankVerification {
  int n = 1;
  /// N_T at this rank (closed product for k = 2, support walk otherwise).
  std::string total;
  bool full_oracle_run = false;
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct VerifyReport {
  int k = 2;
  std::vector<RankVerification> ranks;

  bool pass() const;
};

VerifyReport verify(const RunConfig& config);

/// Count report for one rank: the full oracle plus support counts, or the
/// support walk alone with `types_only`.  Throws OracleCapError above the cap.
CensusReport count(const Rank& rank, const RunConfig& config);

nlohmann::ordered_json to_json(const CensusReport& report);
CensusReport census_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json to_json(const VerifyReport& report);

void write_verify(const VerifyReport& report, Format format, std::ostream& out);
void write_count(const std::vector<CensusReport>& reports, Format format, std::ostream& out);
void write_array(const Rank& rank, Format format, bool coords, std::ostream& out);

/// Command entry points: write the report to `out`, diagnostics to `err`,
/// and return the exit code (0 pass, 1 identity failure, 2 usage).
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_print_array(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cascade
