#include <numeric>
#include <stdexcept>

#include "internal.hpp"
#include "normalcut/error.hpp"
#include "normalcut/normal_surface.hpp"

namespace normalcut {

namespace internal {

void check_nonneg_shape(const Triangulation& tri, const NormalVector& x) {
  if (x.size() != tri.coord_count())
    throw std::invalid_argument("coordinate count mismatch");
  for (std::int64_t c : x)
    if (c < 0) throw std::invalid_argument("negative coordinate");
}

std::int64_t corners_on_edge_slot(const NormalVector& x, int es) {
  const int tet = es / 6, e = es % 6;
  const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
  std::int64_t n = x[coord_index(tet, a)] + x[coord_index(tet, b)];
  for (int q = 4; q < 7; ++q)
    if (quad_meets_edge(q, e)) n += x[coord_index(tet, q)];
  return n;
}

}  // namespace internal

// Corners grouped around an edge class all meet in one point per level, so
// the class contributes (total corners) / (number of slots) points.
std::int64_t weight(const Triangulation& tri, const NormalVector& x) {
  internal::check_nonneg_shape(tri, x);
  const Skeleton skel = build_skeleton(tri);
  std::int64_t total = 0;
  for (const auto& members : skel.edge_members) {
    std::int64_t corners = 0;
    for (int es : members) corners += internal::corners_on_edge_slot(x, es);
    const auto deg = static_cast<std::int64_t>(members.size());
    if (corners % deg != 0)
      throw std::domain_error(
          "corner counts do not balance around an edge (vector violates the "
          "matching equations)");
    total += corners / deg;
  }
  return total;
}

std::int64_t euler_characteristic(const Triangulation& tri, const NormalVector& x) {
  internal::check_nonneg_shape(tri, x);
  const MatchingSystem sys = matching_system(tri);
  if (!sys.satisfied_by(x))
    throw std::invalid_argument(
        "euler_characteristic requires the matching equations (arc "
        "identification is ill-defined otherwise)");

  // Arc cells: arcs on interior faces are identified in matching pairs, arcs
  // on boundary faces stay free.  Count each interior identification once.
  std::int64_t arcs = 0;
  for (int tet = 0; tet < tri.tet_count(); ++tet) {
    for (int face = 0; face < 4; ++face) {
      if (tri.is_glued(tet, face)) {
        const Gluing& g = tri.gluing(tet, face);
        if (g.tet < tet || (g.tet == tet && g.face < face)) continue;  // counted from other side
      }
      for (int v : kFaceVertices[face]) {
        arcs += x[coord_index(tet, v)] +
                x[coord_index(tet, quad_separating(v, face))];
      }
    }
  }

  const std::int64_t points = weight(tri, x);
  const std::int64_t disks = std::accumulate(x.begin(), x.end(), std::int64_t{0});
  return points - arcs + disks;
}

}  // namespace normalcut
