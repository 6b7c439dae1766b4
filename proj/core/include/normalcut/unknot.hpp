#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "normalcut/enumeration.hpp"
#include "normalcut/normal_surface.hpp"

namespace normalcut {

// True when the triangulation looks like a knot complement: exactly one
// boundary component, a torus (Euler characteristic 0, orientable), and
// H1 free of rank 1.
bool check_knot_complement(const Triangulation& tri);

struct UnknotOptions {
  EnumerationLimits limits;
  int jobs = 1;  // worker threads for per-solution reconstruction
};

struct UnknotDiagnostics {
  // Size of the full fundamental set.  The decision itself only needs the
  // admissible solutions (every embedded disk is admissible), so this count
  // is filled in as a diagnostic when the unrestricted search box fits the
  // configured cap and left empty when it does not.
  std::optional<std::int64_t> fundamental_count;
  std::int64_t admissible_count = 0;
  std::int64_t disk_count = 0;            // connected, euler 1, one boundary curve
  std::int64_t essential_disk_count = 0;  // disks with essential boundary
  // Smallest genus among connected orientable one-boundary-curve essential
  // spanning surfaces found in the fundamental set; not claimed minimal over
  // all spanning surfaces.
  std::optional<std::int64_t> min_spanning_genus_found;
};

struct UnknotVerdict {
  bool unknot = false;
  // Lexicographically least admissible fundamental solution reconstructing
  // to a connected surface with euler characteristic 1, one boundary curve,
  // and essential boundary.  Present iff unknot.
  std::optional<NormalVector> certificate;
  UnknotDiagnostics diagnostics;
};

// Decides whether the knot complement is the complement of the trivial knot.
// Throws std::invalid_argument when check_knot_complement fails, limit_error
// when enumeration exceeds the configured cap.
UnknotVerdict decide_unknot(const Triangulation& tri, const UnknotOptions& opts);

}  // namespace normalcut
