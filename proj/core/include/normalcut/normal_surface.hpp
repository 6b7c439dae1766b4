#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normalcut/skeleton.hpp"
#include "normalcut/triangulation.hpp"

namespace normalcut {

// Candidate normal surface in disk-type coordinates: 7 entries per
// tetrahedron, [tri0 tri1 tri2 tri3 quad01|23 quad02|13 quad03|12].
using NormalVector = std::vector<std::int64_t>;

// One linear condition sum(lhs coords) = sum(rhs coords) produced by an arc
// type on an interior face identification.
struct MatchingRow {
  int pair_index = 0;  // which interior identification (canonical order)
  int arc_vertex = 0;  // vertex of the representative face the arc cuts off

  // Coordinate indices of the four contributing disk types: triangle and
  // quad on the representative side, triangle and quad on the partner side.
  // Entries may coincide when a tetrahedron is glued to itself.
  std::size_t lhs_tri = 0, lhs_quad = 0, rhs_tri = 0, rhs_quad = 0;

  // Dense coefficients (+1/+1/-1/-1 accumulated; cancellation possible).
  std::vector<std::int64_t> coeffs;
};

struct MatchingSystem {
  int tet_count = 0;
  std::size_t coord_count = 0;
  std::vector<MatchingRow> rows;  // 3 per interior identification

  bool satisfied_by(const NormalVector& x) const;
};

// Throws parse_error if the triangulation has reversed edge identifications
// (no such manifold triangulations exist).
MatchingSystem matching_system(const Triangulation& tri);

// At most one quadrilateral type per tetrahedron has a positive coordinate.
bool satisfies_quad_condition(const NormalVector& x);

// Non-negative + matching + quad condition.
bool is_admissible(const MatchingSystem& sys, const NormalVector& x);

// Number of intersections with the triangulation's 1-skeleton: disk corners
// grouped around each edge class, one point per `degree` corners.  Defined
// for any non-negative vector; throws std::domain_error when corner counts
// do not balance around some edge (possible only for non-matching vectors).
std::int64_t weight(const Triangulation& tri, const NormalVector& x);

// Euler characteristic of the cell structure the disks induce: weight points
// minus identified arcs plus disks.  Requires the matching equations (arc
// identification is ill-defined otherwise); the quad condition is not needed.
std::int64_t euler_characteristic(const Triangulation& tri, const NormalVector& x);

struct HakenSum {
  NormalVector sum;
  bool admissible = false;  // the quad condition can fail on the sum
};

// Coordinate-wise sum of two matching vectors.
HakenSum haken_sum(const MatchingSystem& sys, const NormalVector& a,
                   const NormalVector& b);

// The embedded surface corresponding to an admissible vector.
struct SurfaceComponent {
  std::int64_t euler = 0;
  std::int64_t weight = 0;  // 1-skeleton intersection points in this component
  bool orientable = true;
  int boundary_curve_count = 0;
};

struct BoundaryCurve {
  int component = 0;  // index into SurfaceReport::components
  // Coordinates of the curve's mod-2 homology class with respect to a fixed
  // cycle basis of H1 of the boundary surface (empty for closed manifolds).
  std::vector<std::uint8_t> mod2_class;
  bool essential = false;  // nonzero mod-2 class
};

struct SurfaceReport {
  std::int64_t euler = 0;
  std::int64_t weight = 0;
  std::vector<SurfaceComponent> components;
  std::vector<BoundaryCurve> boundary_curves;

  int component_count() const { return static_cast<int>(components.size()); }
  bool connected() const { return components.size() == 1; }
};

// Requires admissibility; throws std::invalid_argument otherwise.  The zero
// vector reconstructs to an empty report.
SurfaceReport reconstruct(const Triangulation& tri, const NormalVector& x);

// True when at least one boundary curve of the reconstructed surface has
// nonzero mod-2 class on the boundary surface.  Throws std::invalid_argument
// when the surface is closed (no boundary curve to test).
bool is_essential_boundary(const Triangulation& tri, const NormalVector& x);

}  // namespace normalcut
