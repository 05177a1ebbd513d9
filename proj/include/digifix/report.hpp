#pragma once

#include <string>

#include <json.hpp>

#include "digifix/spectrum.hpp"

namespace digifix {

inline constexpr const char* kToolVersion = "digifix 1.0.0";

struct Report {
  std::string command;
  std::string input_digest;  // hex SHA-256 of the canonical inputs
  nlohmann::json result = nlohmann::json::object();
  EnumerationStats stats;
  std::string version = kToolVersion;
};

enum class ReportFormat { json, csv, text };

ReportFormat parse_report_format(const std::string& name);

/// SHA-256 of the given bytes as lowercase hex.
std::string sha256_hex(const std::string& bytes);

/// json: canonical, no elapsed time (so reruns are byte-identical).
/// csv: result flattened to `path,value` rows; arrays of scalars give one row
///   per element, an empty array gives no rows.
/// text: indented listing including the elapsed time.
std::string write_report(const Report& r, ReportFormat format);

}  // namespace digifix
