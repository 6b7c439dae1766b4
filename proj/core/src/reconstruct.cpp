#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "internal.hpp"
#include "normalcut/error.hpp"
#include "normalcut/normal_surface.hpp"

// Rebuilds the embedded surface from its coordinates.  Parallel copies of a
// disk type are nested: triangles of type v are indexed by distance from
// vertex v, quad copies lie between the triangle stacks, ordered from the
// side-0 edge of their type towards the side-1 edge.  Arcs of one type on a
// face are nested around the vertex they cut off, and a face gluing matches
// them in equal nesting order; the disks at matched arcs are joined.

namespace normalcut {

namespace {

// --- GF(2) helpers -------------------------------------------------------

struct Bits {
  std::vector<std::uint64_t> w;
  std::size_t n = 0;
  explicit Bits(std::size_t bits = 0) : w((bits + 63) / 64, 0), n(bits) {}
  bool get(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  void flip(std::size_t i) { w[i / 64] ^= (1ull << (i % 64)); }
  void operator^=(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
  }
  bool dot(const Bits& o) const {
    std::uint64_t acc = 0;
    bool parity = false;
    for (std::size_t k = 0; k < w.size(); ++k) {
      acc = w[k] & o.w[k];
      parity ^= (__builtin_popcountll(acc) & 1);
    }
    return parity;
  }
};

// Keeps vectors in echelon form keyed by leading bit; returns true when v
// was independent and has been added.
bool echelon_insert(std::map<std::size_t, Bits>& basis, Bits v) {
  for (;;) {
    std::size_t lead = v.n;
    for (std::size_t i = 0; i < v.n; ++i)
      if (v.get(i)) {
        lead = i;
        break;
      }
    if (lead == v.n) return false;
    auto it = basis.find(lead);
    if (it == basis.end()) {
      basis.emplace(lead, std::move(v));
      return true;
    }
    v ^= it->second;
  }
}

// Representatives of a basis of H1(boundary surface; Z/2): cycles of the
// boundary complex (edges = boundary edge cells) modulo triangle boundaries.
std::vector<Bits> boundary_cycle_basis(const Skeleton& skel, const BoundarySurface& b) {
  const std::size_t E = b.edges.size();
  if (E == 0) return {};

  // d1: edge cell -> sum of endpoint vertex cells.
  std::vector<Bits> rows(b.vertex_cell_count, Bits(E));
  for (std::size_t e = 0; e < E; ++e) {
    const auto& side = b.edges[e].side[0];
    const int el = side.edge_slot % 6;
    for (int v : {kEdgeVertices[el][0], kEdgeVertices[el][1]})
      rows[b.vertex_cell[side.face_slot * 4 + v]].flip(e);
  }

  // Reduced row echelon form; free columns generate the kernel.
  std::vector<int> pivot_row_of_col(E, -1);
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < E && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    pivot_row_of_col[c] = static_cast<int>(r);
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<Bits> kernel;
  for (std::size_t c = 0; c < E; ++c) {
    if (pivot_row_of_col[c] >= 0) continue;
    Bits z(E);
    z.flip(c);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      if (rows[k].get(c)) z.flip(pivot_cols[k]);
    kernel.push_back(std::move(z));
  }

  // Quotient by the triangle boundaries.
  std::map<std::size_t, Bits> echelon;
  for (int fs : b.faces) {
    Bits row(E);
    const auto& cv = kFaceVertices[fs % 4];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int es = (fs / 4) * 6 + edge_index(cv[i], cv[j]);
        row.flip(static_cast<std::size_t>(b.edge_cell_of_class[skel.edge_class[es]]));
      }
    echelon_insert(echelon, std::move(row));
  }
  std::vector<Bits> reps;
  for (const Bits& z : kernel) {
    Bits copy = z;
    if (echelon_insert(echelon, std::move(copy))) reps.push_back(z);
  }
  return reps;
}

// --- disk bookkeeping ----------------------------------------------------

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t m) : parent(m) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct ArcEnd {
  int disk = 0;       // disk instance id
  int tbit = 0;       // 0 when the arc's cut-off side is the disk's side A
  // the two disk corners adjacent to this arc: (edge slot, slot position)
  std::array<std::pair<int, std::int64_t>, 2> corners;
};

// (canonical face slot, cutoff vertex, nesting position)
using ArcKey = std::tuple<int, int, std::int64_t>;

}  // namespace

SurfaceReport reconstruct(const Triangulation& tri, const NormalVector& x) {
  const MatchingSystem sys = matching_system(tri);
  if (!is_admissible(sys, x))
    throw std::invalid_argument("reconstruct requires an admissible vector");

  SurfaceReport rep;
  if (std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; }))
    return rep;  // empty surface

  const Skeleton skel = build_skeleton(tri);
  const BoundarySurface bdry = boundary_surface(tri, skel);
  const int t = tri.tet_count();

  // Disk instance ids: tets in order, types 0..6, copies innermost-first.
  std::vector<int> base(tri.coord_count() + 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) base[i + 1] = base[i] + static_cast<int>(x[i]);
  const int disk_count = base[x.size()];
  auto disk_id = [&](int tet, int type, int copy) {
    return base[coord_index(tet, type)] + copy;
  };

  // Stack heights per edge slot; all slots of a class must agree.
  const std::size_t edge_slots = static_cast<std::size_t>(t) * 6;
  std::vector<std::int64_t> crossings(edge_slots);
  for (std::size_t es = 0; es < edge_slots; ++es)
    crossings[es] = internal::corners_on_edge_slot(x, static_cast<int>(es));
  std::vector<std::int64_t> class_height(skel.edge_members.size());
  for (std::size_t c = 0; c < skel.edge_members.size(); ++c) {
    class_height[c] = crossings[skel.edge_members[c][0]];
    for (int es : skel.edge_members[c])
      if (crossings[es] != class_height[c])
        throw parse_error("disk stacks disagree around an edge class (not a manifold triangulation)");
  }

  // Corner position of a disk on edge slot es, measured from the low vertex.
  // Layout along edge (a,b): triangles at a (by copy), then the quad block,
  // then triangles at b reversed.
  auto tri_corner_pos = [&](int tet, int v, int copy, int w) -> std::pair<int, std::int64_t> {
    const int es = tet * 6 + edge_index(std::min(v, w), std::max(v, w));
    if (v < w) return {es, copy};
    return {es, crossings[es] - 1 - copy};
  };
  auto quad_corner_pos = [&](int tet, int q, int copy, int e) -> std::pair<int, std::int64_t> {
    const int es = tet * 6 + e;
    const int a = kEdgeVertices[e][0];
    const std::int64_t m = x[coord_index(tet, q)];
    const std::int64_t block = vertex_in_side0(q, a) ? copy : m - 1 - copy;
    return {es, x[coord_index(tet, a)] + block};
  };

  // Level of a slot position within its edge class (class coordinates run
  // along the representative slot's low-to-high direction).
  auto level_of = [&](int es, std::int64_t pos) -> std::pair<int, std::int64_t> {
    const int cls = skel.edge_class[es];
    return {cls, skel.edge_sign[es] > 0 ? pos : class_height[cls] - 1 - pos};
  };

  // Arc cells keyed on the representative side of each face identification.
  auto canon_arc = [&](int tet, int face, int cutoff, std::int64_t pos) -> ArcKey {
    const int fs = tet * 4 + face;
    if (tri.is_glued(tet, face)) {
      const Gluing& g = tri.gluing(tet, face);
      const int ps = g.tet * 4 + g.face;
      if (ps < fs) return {ps, g.map[cutoff], pos};
    }
    return {fs, cutoff, pos};
  };

  std::map<ArcKey, std::vector<ArcEnd>> arcs;
  for (int tet = 0; tet < t; ++tet) {
    for (int v = 0; v < 4; ++v) {  // triangle stacks
      const std::int64_t m = x[coord_index(tet, v)];
      for (int copy = 0; copy < m; ++copy) {
        for (int face = 0; face < 4; ++face) {
          if (face == v) continue;
          ArcEnd end;
          end.disk = disk_id(tet, v, copy);
          end.tbit = 0;
          int k = 0;
          for (int w : kFaceVertices[face])
            if (w != v) end.corners[k++] = tri_corner_pos(tet, v, copy, w);
          arcs[canon_arc(tet, face, v, copy)].push_back(end);
        }
      }
    }
    for (int q = 4; q < 7; ++q) {  // quad stack (at most one per tet)
      const std::int64_t m = x[coord_index(tet, q)];
      for (int copy = 0; copy < m; ++copy) {
        for (int face = 0; face < 4; ++face) {
          const int cutoff = quad_partner(q, face);  // vertex paired with face's opposite
          const std::int64_t pos =
              x[coord_index(tet, cutoff)] +
              (vertex_in_side0(q, cutoff) ? copy : m - 1 - copy);
          ArcEnd end;
          end.disk = disk_id(tet, q, copy);
          end.tbit = vertex_in_side0(q, cutoff) ? 0 : 1;
          int k = 0;
          for (int w : kFaceVertices[face])
            if (w != cutoff)
              end.corners[k++] = quad_corner_pos(tet, q, copy, edge_index(std::min(cutoff, w), std::max(cutoff, w)));
          arcs[canon_arc(tet, face, cutoff, pos)].push_back(end);
        }
      }
    }
  }

  // Join disks across identified arcs; 2-color for transverse orientation.
  UnionFind comp(disk_count);
  std::vector<std::vector<std::pair<int, int>>> parity_adj(disk_count);
  for (auto& [key, ends] : arcs) {
    const int fs = std::get<0>(key);
    const bool interior = tri.is_glued(fs / 4, fs % 4);
    if (interior) {
      if (ends.size() != 2)
        throw std::logic_error("interior arc cell without matched ends");
      comp.unite(ends[0].disk, ends[1].disk);
      parity_adj[ends[0].disk].push_back({ends[1].disk, ends[0].tbit ^ ends[1].tbit});
      parity_adj[ends[1].disk].push_back({ends[0].disk, ends[0].tbit ^ ends[1].tbit});
    } else if (ends.size() != 1) {
      throw std::logic_error("boundary arc cell with matched ends");
    }
  }

  // Component numbering by smallest disk id.
  std::vector<int> comp_of_disk(disk_count, -1);
  std::vector<int> root_comp(disk_count, -1);
  int n_comp = 0;
  for (int d = 0; d < disk_count; ++d) {
    const int r = comp.find(d);
    if (root_comp[r] < 0) root_comp[r] = n_comp++;
    comp_of_disk[d] = root_comp[r];
  }
  rep.components.assign(n_comp, {});

  // Orientability: propagate side labels; a conflict marks the component.
  {
    std::vector<int> color(disk_count, -1);
    for (int d0 = 0; d0 < disk_count; ++d0) {
      if (color[d0] >= 0) continue;
      color[d0] = 0;
      std::vector<int> stack{d0};
      while (!stack.empty()) {
        const int d = stack.back();
        stack.pop_back();
        for (auto [nd, rel] : parity_adj[d]) {
          if (color[nd] < 0) {
            color[nd] = color[d] ^ rel;
            stack.push_back(nd);
          } else if (color[nd] != (color[d] ^ rel)) {
            rep.components[comp_of_disk[d]].orientable = false;
          }
        }
      }
    }
  }

  // Surface points on the 1-skeleton: (edge class, level) cells.
  std::map<std::pair<int, std::int64_t>, int> vpoint_comp;
  auto touch_vpoint = [&](int es, std::int64_t pos, int component) {
    const auto key = level_of(es, pos);
    auto [it, inserted] = vpoint_comp.emplace(key, component);
    if (!inserted && it->second != component)
      throw std::logic_error("1-skeleton point shared between components");
  };
  for (int tet = 0; tet < t; ++tet) {
    for (int v = 0; v < 4; ++v) {
      for (int copy = 0; copy < x[coord_index(tet, v)]; ++copy) {
        const int d = disk_id(tet, v, copy);
        for (int w = 0; w < 4; ++w) {
          if (w == v) continue;
          const auto [es, pos] = tri_corner_pos(tet, v, copy, w);
          touch_vpoint(es, pos, comp_of_disk[d]);
        }
      }
    }
    for (int q = 4; q < 7; ++q) {
      for (int copy = 0; copy < x[coord_index(tet, q)]; ++copy) {
        const int d = disk_id(tet, q, copy);
        for (int e = 0; e < 6; ++e) {
          if (!quad_meets_edge(q, e)) continue;
          const auto [es, pos] = quad_corner_pos(tet, q, copy, e);
          touch_vpoint(es, pos, comp_of_disk[d]);
        }
      }
    }
  }

  // Per-component cell counts -> Euler characteristic and weight.
  std::vector<std::int64_t> f_cnt(n_comp, 0), e_cnt(n_comp, 0), v_cnt(n_comp, 0);
  for (int d = 0; d < disk_count; ++d) ++f_cnt[comp_of_disk[d]];
  for (const auto& [key, ends] : arcs) ++e_cnt[comp_of_disk[ends[0].disk]];
  for (const auto& [key, c] : vpoint_comp) ++v_cnt[c];
  for (int c = 0; c < n_comp; ++c) {
    rep.components[c].euler = v_cnt[c] - e_cnt[c] + f_cnt[c];
    rep.components[c].weight = v_cnt[c];
    rep.euler += rep.components[c].euler;
    rep.weight += v_cnt[c];
  }

  // Boundary curves: walk boundary arcs through their shared endpoints.
  struct BoundaryIncidence {
    std::vector<std::pair<std::size_t, int>> ends;  // (boundary arc index, which end)
  };
  std::vector<std::pair<ArcKey, ArcEnd>> barcs;
  for (const auto& [key, ends] : arcs)
    if (!tri.is_glued(std::get<0>(key) / 4, std::get<0>(key) % 4))
      barcs.push_back({key, ends[0]});

  std::map<std::pair<int, std::int64_t>, BoundaryIncidence> at_point;
  for (std::size_t i = 0; i < barcs.size(); ++i)
    for (int end = 0; end < 2; ++end) {
      const auto [es, pos] = barcs[i].second.corners[end];
      at_point[level_of(es, pos)].ends.push_back({i, end});
    }
  for (const auto& [key, inc] : at_point)
    if (inc.ends.size() != 2)
      throw std::logic_error("surface boundary is not a 1-manifold");

  const std::vector<Bits> basis = boundary_cycle_basis(skel, bdry);
  std::vector<char> arc_visited(barcs.size(), 0);
  for (std::size_t start = 0; start < barcs.size(); ++start) {
    if (arc_visited[start]) continue;
    BoundaryCurve curve;
    curve.component = comp_of_disk[barcs[start].second.disk];
    Bits parity(bdry.edges.size());
    std::size_t cur = start;
    int out_end = 0;
    do {
      arc_visited[cur] = 1;
      const auto [es, pos] = barcs[cur].second.corners[out_end];
      const auto pt = level_of(es, pos);
      parity.flip(static_cast<std::size_t>(bdry.edge_cell_of_class[pt.first]));
      const auto& inc = at_point.at(pt).ends;
      const auto next = (inc[0] == std::make_pair(cur, out_end)) ? inc[1] : inc[0];
      cur = next.first;
      out_end = 1 - next.second;
    } while (cur != start || out_end != 0);
    for (const Bits& z : basis) curve.mod2_class.push_back(z.dot(parity) ? 1 : 0);
    curve.essential = std::any_of(curve.mod2_class.begin(), curve.mod2_class.end(),
                                  [](std::uint8_t b) { return b != 0; });
    rep.components[curve.component].boundary_curve_count += 1;
    rep.boundary_curves.push_back(std::move(curve));
  }

  return rep;
}

bool is_essential_boundary(const Triangulation& tri, const NormalVector& x) {
  const SurfaceReport rep = reconstruct(tri, x);
  if (rep.boundary_curves.empty())
    throw std::invalid_argument("surface is closed: no boundary curve to test");
  return std::any_of(rep.boundary_curves.begin(), rep.boundary_curves.end(),
                     [](const BoundaryCurve& c) { return c.essential; });
}

}  // namespace normalcut
