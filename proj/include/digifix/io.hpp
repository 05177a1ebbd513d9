#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "digifix/image.hpp"
#include "digifix/selfmap.hpp"

namespace digifix::io {

inline constexpr const char* kImageFormat = "digifix-image/1";
inline constexpr const char* kMapFormat = "digifix-map/1";

nlohmann::json image_to_json(const DigitalImage& x);
/// Throws InvalidInput naming the offending field.
DigitalImage image_from_json(const nlohmann::json& j);

nlohmann::json map_to_json(const SelfMap& f);
SelfMap map_from_json(const nlohmann::json& j);

/// Parse errors carry the file name and the line/column reported by the parser.
nlohmann::json read_json_file(const std::filesystem::path& path);

DigitalImage load_image(const std::filesystem::path& path);
void save_image(const std::filesystem::path& path, const DigitalImage& x);

SelfMap load_map(const std::filesystem::path& path);
void save_map(const std::filesystem::path& path, const SelfMap& f);

/// Compact serialization with sorted keys; equal values give equal bytes.
std::string canonical(const nlohmann::json& j);

}  // namespace digifix::io
