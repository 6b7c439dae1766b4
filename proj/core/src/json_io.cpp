#include <cstdio>

#include <json.hpp>

#include "normalcut/error.hpp"
#include "normalcut/json_io.hpp"

namespace normalcut {

std::string checksum(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::string serialize_normal_vector(const NormalVector& x,
                                    std::string_view triangulation_checksum) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["triangulation_checksum"] = std::string(triangulation_checksum);
  j["coords"] = x;
  return j.dump(2) + "\n";
}

NormalVectorFile parse_normal_vector(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("normal vector file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array())
    throw parse_error("normal vector file must be an object with a coords array");
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
    throw parse_error("normal vector file must declare schema_version " +
                      std::to_string(kSchemaVersion));
  if (!j.contains("triangulation_checksum") || !j["triangulation_checksum"].is_string())
    throw parse_error("normal vector file must carry its triangulation_checksum");

  NormalVectorFile out;
  for (const auto& e : j["coords"]) {
    if (!e.is_number_integer())
      throw parse_error("coords entries must be integers");
    out.coords.push_back(e.get<std::int64_t>());
  }
  out.triangulation_checksum = j["triangulation_checksum"].get<std::string>();
  return out;
}

}  // namespace normalcut
