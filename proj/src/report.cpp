#include "digifix/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "digifix/error.hpp"
#include "digifix/io.hpp"

namespace digifix {

using nlohmann::json;

namespace {

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten_csv(const json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten_csv(*it, path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (v.is_array()) {
    const bool scalars = std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
    for (std::size_t i = 0; i < v.size(); ++i)
      flatten_csv(v[i], scalars ? path : path + "[" + std::to_string(i) + "]", out);
  } else {
    out << csv_field(path) << ',' << csv_field(scalar_text(v)) << '\n';
  }
}

void write_text(const json& v, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = v.begin(); it != v.end(); ++it) {
    const auto& e = *it;
    const bool flat_array = e.is_array() && std::none_of(e.begin(), e.end(), [](const json& x) { return x.is_structured(); });
    if (e.is_object() || (e.is_array() && !flat_array)) {
      out << pad << it.key() << ":\n";
      if (e.is_object()) {
        write_text(e, indent + 1, out);
      } else {
        for (std::size_t i = 0; i < e.size(); ++i) {
          out << pad << "  [" << i << "]" << (e[i].is_object() ? "\n" : " " + scalar_text(e[i]) + "\n");
          if (e[i].is_object()) write_text(e[i], indent + 2, out);
        }
      }
    } else if (flat_array) {
      out << pad << it.key() << ": {";
      for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ", " : "") << scalar_text(e[i]);
      out << "}\n";
    } else {
      out << pad << it.key() << ": " << scalar_text(e) << '\n';
    }
  }
}

json stats_json(const EnumerationStats& s) {
  return {{"maps_enumerated", s.maps_enumerated}, {"nodes_visited", s.nodes_visited}, {"truncated", s.truncated}};
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw InvalidInput("unknown report format '" + name + "'");
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 computation failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::string write_report(const Report& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json: {
      const json j = {{"command", r.command},
                      {"input_digest", r.input_digest},
                      {"result", r.result},
                      {"stats", stats_json(r.stats)},
                      {"version", r.version}};
      return io::canonical(j) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      flatten_csv(r.result, "", out);
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      out << r.command << " (" << r.version << ")\n";
      out << "input: " << r.input_digest << '\n';
      write_text(r.result, 0, out);
      out << "maps enumerated: " << r.stats.maps_enumerated << ", nodes: " << r.stats.nodes_visited
          << (r.stats.truncated ? ", truncated" : "") << ", elapsed: "
          << std::chrono::duration<double>(r.stats.elapsed).count() << " s\n";
      return out.str();
    }
  }
  return {};
}

}  // namespace digifix
