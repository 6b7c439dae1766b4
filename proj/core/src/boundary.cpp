#include <algorithm>
#include <numeric>

#include "normalcut/error.hpp"
#include "normalcut/skeleton.hpp"

namespace normalcut {

namespace {

// The two faces of a tetrahedron containing edge e = (a,b) are the faces
// opposite the two other vertices.
std::array<int, 2> faces_of_edge(int e) {
  const int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
  std::array<int, 2> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != a && v != b) out[k++] = v;
  return out;
}

struct PlainUnionFind {
  std::vector<int> parent;
  explicit PlainUnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Direction induced on edge (a,b) (a<b) by the reference orientation
// (v0,v1,v2) of the face: +1 = low to high.
int induced_direction(int face, int a, int b) {
  const auto& cv = kFaceVertices[face];
  if (a == cv[0] && b == cv[2]) return -1;
  return 1;
}

}  // namespace

BoundarySurface boundary_surface(const Triangulation& tri) {
  return boundary_surface(tri, build_skeleton(tri));
}

BoundarySurface boundary_surface(const Triangulation& tri, const Skeleton& skel) {
  const int t = tri.tet_count();
  BoundarySurface b;

  for (int tet = 0; tet < t; ++tet)
    for (int f = 0; f < 4; ++f)
      if (tri.is_boundary_face(tet, f)) b.faces.push_back(tet * 4 + f);

  // Walk the fan of tetrahedra around each edge class.  A fan starting at a
  // boundary face must end at a boundary face; the two ends form one edge of
  // the boundary surface.  Sides are (edge slot, face) pairs; each edge slot
  // has two sides, one per face of its tetrahedron containing it.
  const std::size_t edge_slots = static_cast<std::size_t>(t) * 6;
  std::vector<std::array<char, 2>> side_seen(edge_slots, {0, 0});
  b.edge_cell_of_class.assign(skel.edge_members.size(), -1);

  auto side_index = [](int e, int face) {
    const auto fs = faces_of_edge(e);
    return face == fs[0] ? 0 : 1;
  };

  for (int start_slot : b.faces) {
    const int tet = start_slot / 4, f = start_slot % 4;
    const auto& cv = kFaceVertices[f];
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        int a = cv[i], bb = cv[j];
        int es = tet * 6 + edge_index(a, bb);
        if (side_seen[es][side_index(es % 6, f)]) continue;

        BoundaryEdgeCell cell;
        cell.edge_class = skel.edge_class[es];
        cell.side[0] = {start_slot, es};
        side_seen[es][side_index(es % 6, f)] = 1;

        // March through the fan until the far boundary face.
        int cur_tet = tet, cur_a = a, cur_b = bb, entered = f;
        for (;;) {
          const int e = edge_index(std::min(cur_a, cur_b), std::max(cur_a, cur_b));
          const auto fs = faces_of_edge(e);
          const int fout = (fs[0] == entered) ? fs[1] : fs[0];
          const int slot = cur_tet * 6 + e;
          side_seen[slot][side_index(e, fout)] = 1;
          if (tri.is_boundary_face(cur_tet, fout)) {
            cell.side[1] = {cur_tet * 4 + fout, slot};
            break;
          }
          const Gluing& g = tri.gluing(cur_tet, fout);
          cur_a = g.map[cur_a];
          cur_b = g.map[cur_b];
          cur_tet = g.tet;
          entered = g.face;
          const int ns = cur_tet * 6 +
                         edge_index(std::min(cur_a, cur_b), std::max(cur_a, cur_b));
          side_seen[ns][side_index(ns % 6, entered)] = 1;
        }

        cell.relative_sign =
            skel.edge_sign[cell.side[0].edge_slot] * skel.edge_sign[cell.side[1].edge_slot];
        if (b.edge_cell_of_class[cell.edge_class] >= 0)
          throw parse_error(
              "edge class " + std::to_string(cell.edge_class) +
              " meets the boundary in more than one fan (not a manifold triangulation)");
        b.edge_cell_of_class[cell.edge_class] = static_cast<int>(b.edges.size());
        if (cell.side[1].face_slot < cell.side[0].face_slot ||
            (cell.side[1].face_slot == cell.side[0].face_slot &&
             cell.side[1].edge_slot < cell.side[0].edge_slot))
          std::swap(cell.side[0], cell.side[1]);
        b.edges.push_back(cell);
      }
    }
  }

  // Any side left unseen must belong to a fully interior fan; if its class
  // already produced a boundary cell the class has two fans.
  for (std::size_t es = 0; es < edge_slots; ++es) {
    for (int k = 0; k < 2; ++k) {
      if (side_seen[es][k]) continue;
      if (b.edge_cell_of_class[skel.edge_class[es]] >= 0)
        throw parse_error("edge class " + std::to_string(skel.edge_class[es]) +
                          " has both boundary and interior fans (not a manifold triangulation)");
    }
  }

  // Vertex cells of the boundary surface: corners identified along the two
  // sides of each boundary edge.
  const std::size_t corner_slots = static_cast<std::size_t>(t) * 16;
  PlainUnionFind corners(corner_slots);
  auto corner_id = [](int face_slot, int v) { return face_slot * 4 + v; };
  for (const BoundaryEdgeCell& cell : b.edges) {
    const int a0 = kEdgeVertices[cell.side[0].edge_slot % 6][0];
    const int b0 = kEdgeVertices[cell.side[0].edge_slot % 6][1];
    const int a1 = kEdgeVertices[cell.side[1].edge_slot % 6][0];
    const int b1 = kEdgeVertices[cell.side[1].edge_slot % 6][1];
    if (cell.relative_sign == 1) {
      corners.unite(corner_id(cell.side[0].face_slot, a0), corner_id(cell.side[1].face_slot, a1));
      corners.unite(corner_id(cell.side[0].face_slot, b0), corner_id(cell.side[1].face_slot, b1));
    } else {
      corners.unite(corner_id(cell.side[0].face_slot, a0), corner_id(cell.side[1].face_slot, b1));
      corners.unite(corner_id(cell.side[0].face_slot, b0), corner_id(cell.side[1].face_slot, a1));
    }
  }
  b.vertex_cell.assign(corner_slots, -1);
  std::vector<int> root_cell(corner_slots, -1);
  for (int fs : b.faces) {
    const auto& cv = kFaceVertices[fs % 4];
    for (int v : cv) {
      const int id = corner_id(fs, v);
      const int r = corners.find(id);
      if (root_cell[r] < 0) root_cell[r] = b.vertex_cell_count++;
      b.vertex_cell[id] = root_cell[r];
    }
  }

  // Components of the boundary surface.
  PlainUnionFind comp(static_cast<std::size_t>(t) * 4);
  for (const BoundaryEdgeCell& cell : b.edges)
    comp.unite(cell.side[0].face_slot, cell.side[1].face_slot);
  b.component_of_face.assign(static_cast<std::size_t>(t) * 4, -1);
  std::vector<int> root_comp(static_cast<std::size_t>(t) * 4, -1);
  for (int fs : b.faces) {
    const int r = comp.find(fs);
    if (root_comp[r] < 0) root_comp[r] = b.component_count++;
    b.component_of_face[fs] = root_comp[r];
  }

  // Euler characteristic per component.
  std::vector<std::int64_t> v_count(b.component_count, 0), e_count(b.component_count, 0),
      f_count(b.component_count, 0);
  std::vector<int> cell_comp(b.vertex_cell_count, -1);
  for (int fs : b.faces) {
    const int c = b.component_of_face[fs];
    ++f_count[c];
    for (int v : kFaceVertices[fs % 4]) {
      const int cell = b.vertex_cell[corner_id(fs, v)];
      if (cell_comp[cell] < 0) {
        cell_comp[cell] = c;
        ++v_count[c];
      }
    }
  }
  for (const BoundaryEdgeCell& cell : b.edges)
    ++e_count[b.component_of_face[cell.side[0].face_slot]];
  b.component_euler.resize(b.component_count);
  for (int c = 0; c < b.component_count; ++c)
    b.component_euler[c] = v_count[c] - e_count[c] + f_count[c];

  // Orientability: try to orient every triangle so each gluing reverses the
  // induced edge directions.  Colors are +-1 relative to the reference
  // orientation (increasing vertex order).
  std::vector<int> color(static_cast<std::size_t>(t) * 4, 0);
  b.component_orientable.assign(b.component_count, 1);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(t) * 4);
  for (const BoundaryEdgeCell& cell : b.edges) {
    const int fa = cell.side[0].face_slot, fb = cell.side[1].face_slot;
    const int ea = cell.side[0].edge_slot % 6, eb = cell.side[1].edge_slot % 6;
    const int ia = induced_direction(fa % 4, kEdgeVertices[ea][0], kEdgeVertices[ea][1]);
    const int ib = induced_direction(fb % 4, kEdgeVertices[eb][0], kEdgeVertices[eb][1]);
    // color_a * color_b must equal -ia*ib*relative_sign
    const int rel = -ia * ib * cell.relative_sign;
    adj[fa].push_back({fb, rel});
    adj[fb].push_back({fa, rel});
  }
  for (int fs : b.faces) {
    if (color[fs] != 0) continue;
    color[fs] = 1;
    std::vector<int> stack{fs};
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      for (auto [next, rel] : adj[cur]) {
        if (color[next] == 0) {
          color[next] = color[cur] * rel;
          stack.push_back(next);
        } else if (color[next] != color[cur] * rel) {
          b.component_orientable[b.component_of_face[cur]] = 0;
        }
      }
    }
  }

  return b;
}

}  // namespace normalcut
