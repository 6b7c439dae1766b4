#pragma once

#include "normalcut/normal_surface.hpp"

namespace normalcut::internal {

// Disk corners carried by one tetrahedron edge slot.
std::int64_t corners_on_edge_slot(const NormalVector& x, int es);

void check_nonneg_shape(const Triangulation& tri, const NormalVector& x);

}  // namespace normalcut::internal
