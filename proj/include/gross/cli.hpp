#pragma once

// Command layer behind the gross-sha executable: record formatting, the
// checkpointed range sweep, and the verify suite. Each command returns the
// process exit code.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gross/lfun.hpp"
#include "gross/report.hpp"
#include "json.hpp"

namespace gross::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUnverified = 2;
inline constexpr int kExitCheckFailed = 3;

enum class Format { kCsv, kJson };

Format parse_format(const std::string& name);

/// "a/b,c/d,e/f" (integers allowed for whole numbers).
TGrid parse_grid(const std::string& text);

/// Default precision: GROSS_SHA_DIGITS when set and valid, otherwise 32.
int default_digits();

/// Column order of CSV output; JSON objects use the same keys.
const std::vector<std::string>& columns();

/// One output row: every column already rendered as text.
struct Record {
  std::int64_t q = 0;
  int digits = 0;
  std::vector<std::string> values;

  const std::string& at(const std::string& column) const;
  /// residual < 10^(-digits/2) and sha_round >= 1.
  bool verified() const;
};

Record make_record(const ShaReport& report);

std::string csv_header();
std::string to_csv(const Record& r);
Record record_from_csv(const std::string& line);

nlohmann::ordered_json to_json(const Record& r);
Record record_from_json(const nlohmann::ordered_json& j);

std::string render(const std::vector<Record>& records, Format format);
std::vector<Record> parse_records(const std::string& text, Format format);

/// Writes via a temporary file in the same directory and renames it over
/// `path`. Throws ResourceError when the directory is not writable.
void write_atomically(const std::string& path, const std::string& contents);

/// Record equality with runtime_ms ignored.
bool same_ignoring_timing(const Record& a, const Record& b);

struct ComputeConfig {
  std::int64_t q = 0;
  int digits = 32;
  Format format = Format::kCsv;
  std::string out;  // empty: stdout
  std::optional<TGrid> grid;
  int margin_digits = 0;
  int jobs = 1;
};

struct RangeConfig {
  std::int64_t q_min = 7;
  std::int64_t q_max = 503;
  int digits = 32;
  int jobs = 1;
  std::string out;
  Format format = Format::kCsv;
  bool resume = false;
};

struct VerifyCommandConfig {
  std::vector<std::int64_t> qs{7, 23, 31, 47, 71};
  int digits = 32;
  std::int64_t oracle_cutoff = 1000;
  std::string inject_fault;  // "" or "coefficient"
};

int run_compute(const ComputeConfig& config, std::ostream& out, std::ostream& err);
int run_range(const RangeConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const VerifyCommandConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gross::cli
