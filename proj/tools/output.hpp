#pragma once

// Records emitted by the command-line tool, with CSV and JSON encodings.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "biquad/census.hpp"
#include "json.hpp"

namespace biquad::cli {

inline constexpr const char* kSchemaVersion = "1.0";

struct CensusRow {
  /// "1".."4", or "all" for totals.
  std::string h;
  /// "real", "complex", or "all".
  std::string signature;
  u64 count_fields = 0;
  u64 count_G = 0;
  double predicted_G = 0;
  std::optional<double> ratio;
  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOutput {
  std::string schema_version = kSchemaVersion;
  u64 X = 0;
  std::string group;
  u64 prime_bound = 0;
  std::vector<CensusRow> rows;
  friend bool operator==(const CensusOutput&, const CensusOutput&) = default;
};

/// Eight (h, signature) rows, two per-signature subtotals, one grand total.
CensusOutput to_output(const CensusReport& r);

void to_json(nlohmann::json& j, const CensusRow& r);
void from_json(const nlohmann::json& j, CensusRow& r);
void to_json(nlohmann::json& j, const CensusOutput& o);
void from_json(const nlohmann::json& j, CensusOutput& o);

/// Shortest round-trip decimal, independent of the locale.
std::string format_double(double v);
/// RFC 4180 field quoting.
std::string csv_field(const std::string& s);

inline constexpr const char* kCensusCsvHeader = "X,h,signature,count_fields,count_G,predicted_G,ratio";
void write_csv(std::ostream& os, const CensusOutput& o);

}  // namespace biquad::cli
