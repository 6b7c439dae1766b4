#include <algorithm>

#include "normalcut/error.hpp"
#include "normalcut/normal_surface.hpp"

namespace normalcut {

// A normal arc in a face cuts off one vertex of that face.  The disks of the
// adjacent tetrahedron inducing such an arc are the triangle at that vertex
// and the quad separating the vertex from the vertex opposite the face.
// Equating arc counts across a face identification, for each of the three
// arc types, yields the matching equations.
MatchingSystem matching_system(const Triangulation& tri) {
  MatchingSystem sys;
  sys.tet_count = tri.tet_count();
  sys.coord_count = tri.coord_count();

  int pair_index = 0;
  for (int tet = 0; tet < tri.tet_count(); ++tet) {
    for (int face = 0; face < 4; ++face) {
      if (!tri.is_glued(tet, face)) continue;
      const Gluing& g = tri.gluing(tet, face);
      if (g.tet < tet || (g.tet == tet && g.face < face)) continue;  // one row set per pair
      for (int v : kFaceVertices[face]) {
        MatchingRow row;
        row.pair_index = pair_index;
        row.arc_vertex = v;
        row.lhs_tri = coord_index(tet, v);
        row.lhs_quad = coord_index(tet, quad_separating(v, face));
        row.rhs_tri = coord_index(g.tet, g.map[v]);
        row.rhs_quad = coord_index(g.tet, quad_separating(g.map[v], g.face));
        row.coeffs.assign(sys.coord_count, 0);
        row.coeffs[row.lhs_tri] += 1;
        row.coeffs[row.lhs_quad] += 1;
        row.coeffs[row.rhs_tri] -= 1;
        row.coeffs[row.rhs_quad] -= 1;
        sys.rows.push_back(std::move(row));
      }
      ++pair_index;
    }
  }
  return sys;
}

bool MatchingSystem::satisfied_by(const NormalVector& x) const {
  if (x.size() != coord_count) return false;
  for (const MatchingRow& row : rows)
    if (x[row.lhs_tri] + x[row.lhs_quad] != x[row.rhs_tri] + x[row.rhs_quad])
      return false;
  return true;
}

bool satisfies_quad_condition(const NormalVector& x) {
  if (x.size() % kDiskTypesPerTet != 0)
    throw std::invalid_argument("coordinate count is not a multiple of 7");
  const std::size_t tets = x.size() / kDiskTypesPerTet;
  for (std::size_t tet = 0; tet < tets; ++tet) {
    int quads = 0;
    for (int q = 4; q < 7; ++q)
      if (x[tet * kDiskTypesPerTet + q] > 0) ++quads;
    if (quads > 1) return false;
  }
  return true;
}

bool is_admissible(const MatchingSystem& sys, const NormalVector& x) {
  if (x.size() != sys.coord_count) return false;
  for (std::int64_t c : x)
    if (c < 0) return false;
  return sys.satisfied_by(x) && satisfies_quad_condition(x);
}

HakenSum haken_sum(const MatchingSystem& sys, const NormalVector& a,
                   const NormalVector& b) {
  if (a.size() != sys.coord_count || b.size() != sys.coord_count)
    throw std::invalid_argument("coordinate count mismatch");
  if (!sys.satisfied_by(a) || !sys.satisfied_by(b))
    throw std::invalid_argument("haken_sum requires matching summands");
  HakenSum out;
  out.sum.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.sum[i] = a[i] + b[i];
  out.admissible = is_admissible(sys, out.sum);
  return out;
}

}  // namespace normalcut
