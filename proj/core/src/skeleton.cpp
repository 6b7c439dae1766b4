#include "normalcut/skeleton.hpp"

#include <algorithm>
#include <numeric>

namespace normalcut {

namespace {

// Union-find with an optional +-1 sign maintained relative to each root.
struct SignedUnionFind {
  std::vector<int> parent;
  std::vector<int> sign;          // sign of the slot relative to its parent
  std::vector<char> inconsistent;  // per root: conflicting signs seen

  explicit SignedUnionFind(std::size_t n)
      : parent(n), sign(n, 1), inconsistent(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  // Returns (root, sign of x relative to root).
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 1};
    auto [root, s] = find(parent[x]);
    parent[x] = root;
    sign[x] *= s;
    return {root, sign[x]};
  }

  // Demand sign(a) * sign(b) == rel.
  void unite(int a, int b, int rel) {
    auto [ra, sa] = find(a);
    auto [rb, sb] = find(b);
    if (ra == rb) {
      if (sa * sb != rel) inconsistent[ra] = 1;
      return;
    }
    parent[rb] = ra;
    sign[rb] = sa * sb * rel;
    if (inconsistent[rb]) inconsistent[ra] = 1;
  }
};

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

// Classes numbered by smallest member slot; fills slot->class and members.
template <typename FindFn>
int number_classes(std::size_t slot_count, FindFn&& find, std::vector<int>& slot_class,
                   std::vector<std::vector<int>>& members) {
  slot_class.assign(slot_count, -1);
  std::vector<int> root_class(slot_count, -1);
  int next = 0;
  for (std::size_t s = 0; s < slot_count; ++s) {
    const int r = find(static_cast<int>(s));
    if (root_class[r] < 0) {
      root_class[r] = next++;
      members.emplace_back();
    }
    slot_class[s] = root_class[r];
    members[root_class[r]].push_back(static_cast<int>(s));
  }
  return next;
}

}  // namespace

bool Skeleton::any_edge_reversed() const {
  return std::any_of(edge_class_reversed.begin(), edge_class_reversed.end(),
                     [](char c) { return c != 0; });
}

Skeleton build_skeleton(const Triangulation& tri) {
  const int t = tri.tet_count();
  Skeleton skel;
  skel.tet_count = t;

  PlainUnionFind vertices(static_cast<std::size_t>(t) * 4);
  SignedUnionFind edges(static_cast<std::size_t>(t) * 6);
  PlainUnionFind faces(static_cast<std::size_t>(t) * 4);

  for (int tet = 0; tet < t; ++tet) {
    for (int face = 0; face < 4; ++face) {
      if (!tri.is_glued(tet, face)) continue;
      const Gluing& g = tri.gluing(tet, face);
      faces.unite(tet * 4 + face, g.tet * 4 + g.face);
      for (int v : kFaceVertices[face]) {
        vertices.unite(tet * 4 + v, g.tet * 4 + g.map[v]);
      }
      // The three edges of the face map across the gluing; a gluing that
      // swaps the endpoint order flips the low-to-high direction.
      const auto& cv = kFaceVertices[face];
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const int a = cv[i], b = cv[j];  // a < b
          const int ia = g.map[a], ib = g.map[b];
          const int rel = (ia < ib) ? 1 : -1;
          edges.unite(tet * 6 + edge_index(a, b),
                      g.tet * 6 + edge_index(std::min(ia, ib), std::max(ia, ib)), rel);
        }
      }
    }
  }

  number_classes(static_cast<std::size_t>(t) * 4,
                 [&](int s) { return vertices.find(s); }, skel.vertex_class,
                 skel.vertex_members);
  number_classes(static_cast<std::size_t>(t) * 4,
                 [&](int s) { return faces.find(s); }, skel.face_class,
                 skel.face_members);

  const std::size_t edge_slots = static_cast<std::size_t>(t) * 6;
  number_classes(edge_slots, [&](int s) { return edges.find(s).first; },
                 skel.edge_class, skel.edge_members);

  skel.edge_sign.assign(edge_slots, 1);
  skel.edge_class_reversed.assign(skel.edge_members.size(), 0);
  // Re-express signs relative to each class's smallest slot.
  std::vector<int> rep_sign(skel.edge_members.size(), 0);
  for (std::size_t s = 0; s < edge_slots; ++s) {
    auto [root, sign] = edges.find(static_cast<int>(s));
    const int cls = skel.edge_class[s];
    if (rep_sign[cls] == 0) rep_sign[cls] = sign;  // first slot = smallest
    skel.edge_sign[s] = sign * rep_sign[cls];
    if (edges.inconsistent[root]) skel.edge_class_reversed[cls] = 1;
  }
  return skel;
}

}  // namespace normalcut
