#pragma once

#include <array>
#include <cstdint>

// Fixed combinatorics of a single tetrahedron with vertices 0..3.
// Face i is the face opposite vertex i.  Edges are indexed 0..5 in the
// order 01, 02, 03, 12, 13, 23.  Per-tetrahedron disk types are indexed
// 0..6: types 0..3 are the normal triangles cutting off vertex v, types
// 4..6 are the quadrilaterals separating 01|23, 02|13, 03|12.

namespace normalcut {

inline constexpr int kDiskTypesPerTet = 7;

inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

constexpr int edge_index(int a, int b) {
  constexpr std::array<std::array<int, 4>, 4> idx = {{
      {-1, 0, 1, 2},
      {0, -1, 3, 4},
      {1, 3, -1, 5},
      {2, 4, 5, -1},
  }};
  return idx[a][b];
}

// Vertices of face f in increasing order (the canonical order used by the
// file format's gluing maps).
inline constexpr std::array<std::array<int, 3>, 4> kFaceVertices = {{
    {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2},
}};

// Quad type offsets 4..6; side 0 of quad 4+k is the edge pair containing
// vertex 0.
inline constexpr std::array<std::array<int, 2>, 3> kQuadSide0 = {{
    {0, 1}, {0, 2}, {0, 3},
}};
inline constexpr std::array<std::array<int, 2>, 3> kQuadSide1 = {{
    {2, 3}, {1, 3}, {1, 2},
}};

// Disk type (4..6) of the quad separating edge {a,b} from the opposite edge.
constexpr int quad_separating(int a, int b) {
  const int p = (a == 0) ? b : (b == 0) ? a : 6 - a - b;
  return 3 + p;
}

// The vertex paired with v by quad type q (q in 4..6).
constexpr int quad_partner(int q, int v) {
  const int k = q - 4;
  if (kQuadSide0[k][0] == v) return kQuadSide0[k][1];
  if (kQuadSide0[k][1] == v) return kQuadSide0[k][0];
  if (kQuadSide1[k][0] == v) return kQuadSide1[k][1];
  return kQuadSide1[k][0];
}

// True if quad type q (4..6) has a corner on edge e, i.e. the edge's
// endpoints lie on different sides of the quad's partition.
constexpr bool quad_meets_edge(int q, int e) {
  const int a = kEdgeVertices[e][0];
  const int b = kEdgeVertices[e][1];
  return quad_partner(q, a) != b;
}

constexpr bool vertex_in_side0(int q, int v) {
  const int k = q - 4;
  return kQuadSide0[k][0] == v || kQuadSide0[k][1] == v;
}

// Disk-type helpers for a coordinate vector laid out as 7 entries per
// tetrahedron: [tri0 tri1 tri2 tri3 quad01|23 quad02|13 quad03|12].
constexpr std::size_t coord_index(int tet, int disk_type) {
  return static_cast<std::size_t>(tet) * kDiskTypesPerTet + disk_type;
}

}  // namespace normalcut
