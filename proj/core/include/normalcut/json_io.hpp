#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "normalcut/normal_surface.hpp"

namespace normalcut {

inline constexpr int kSchemaVersion = 1;

// FNV-1a 64-bit over the raw bytes, rendered as "fnv1a64:<16 hex digits>".
// Ties serialized certificates to the exact triangulation file they refer to.
std::string checksum(std::string_view bytes);

// {"checksum": "...", "coords": [...]} with stable formatting.
std::string serialize_normal_vector(const NormalVector& x,
                                    std::string_view triangulation_checksum);

struct NormalVectorFile {
  NormalVector coords;
  std::string triangulation_checksum;
};

NormalVectorFile parse_normal_vector(std::string_view json_text);

}  // namespace normalcut
