#pragma once

#include <vector>

#include "normalcut/triangulation.hpp"

namespace normalcut {

// Identification classes of the vertices, edges and faces of a triangulation.
//
// Slots index simplices of individual tetrahedra before identification:
//   vertex slot = tet*4 + v,  edge slot = tet*6 + e,  face slot = tet*4 + f.
// Classes are numbered consecutively from 0, ordered by their smallest slot.
struct Skeleton {
  int tet_count = 0;

  std::vector<int> vertex_class;  // vertex slot -> class
  std::vector<int> edge_class;    // edge slot -> class
  std::vector<int> face_class;    // face slot -> class

  // +1 when the slot's low-to-high vertex direction agrees with the class
  // representative's, -1 otherwise.  Representative = smallest slot.
  std::vector<int> edge_sign;

  // A class is flagged when some identification loop returns an edge to
  // itself with reversed direction (the quotient is not a manifold there).
  std::vector<char> edge_class_reversed;

  std::vector<std::vector<int>> vertex_members;  // class -> sorted slots
  std::vector<std::vector<int>> edge_members;
  std::vector<std::vector<int>> face_members;

  int vertex_class_count() const { return static_cast<int>(vertex_members.size()); }
  int edge_class_count() const { return static_cast<int>(edge_members.size()); }
  int face_class_count() const { return static_cast<int>(face_members.size()); }
  bool any_edge_reversed() const;
};

Skeleton build_skeleton(const Triangulation& tri);

// One boundary triangle side: a boundary face slot together with one of its
// three edges (given as the tetrahedron edge slot).
struct BoundarySide {
  int face_slot = -1;
  int edge_slot = -1;
};

// An edge of the boundary surface.  Every boundary edge arises as the two
// ends of the fan of tetrahedra around one edge class.
struct BoundaryEdgeCell {
  int edge_class = -1;
  BoundarySide side[2];
  // Endpoint correspondence between the two sides: +1 when both sides run
  // low-to-high along identified directions, -1 when reversed.
  int relative_sign = 1;
};

// The closed surface made of the unglued tetrahedron faces.
struct BoundarySurface {
  std::vector<int> faces;  // boundary face slots, sorted

  std::vector<BoundaryEdgeCell> edges;
  // edge class -> index into `edges`, or -1 for interior edge classes.
  std::vector<int> edge_cell_of_class;

  // Boundary vertex cells: classes of (face slot, corner vertex) pairs.
  // corner slot = face_slot*4 + corner.
  std::vector<int> vertex_cell;               // corner slot -> cell or -1
  int vertex_cell_count = 0;

  std::vector<int> component_of_face;         // face slot -> component or -1
  int component_count = 0;
  std::vector<std::int64_t> component_euler;  // per component
  std::vector<char> component_orientable;

  bool empty() const { return faces.empty(); }
};

// Requires every edge class to carry at most one fan of tetrahedra (true for
// triangulated manifolds); throws parse_error otherwise.
BoundarySurface boundary_surface(const Triangulation& tri);
BoundarySurface boundary_surface(const Triangulation& tri, const Skeleton& skel);

}  // namespace normalcut
