#include "normalcut/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "normalcut/error.hpp"

namespace normalcut {

namespace {

using big = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<big>>;

// Diagonalize by repeated pivoting on the smallest nonzero entry; exact, so
// intermediate growth is harmless.
std::vector<big> smith_diagonal(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<big> diag;
  std::size_t k = 0;
  while (k < rows && k < cols) {
    // locate smallest nonzero entry in the remaining submatrix
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pr == rows || abs(m[i][j]) < abs(m[pr][pc])))
          pr = i, pc = j;
    if (pr == rows) break;  // all zero
    std::swap(m[k], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        const big q = m[i][k] / m[k][k];
        for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) {  // remainder smaller than pivot: swap up, retry
          std::swap(m[k], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        const big q = m[k][j] / m[k][k];
        for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][j]);
          clean = false;
        }
      }
      if (clean) {
        // row and column k are clear; entries elsewhere stay untouched
        for (std::size_t i = k + 1; i < rows && clean; ++i)
          if (m[i][k] != 0) clean = false;
      }
    }
    diag.push_back(abs(m[k][k]));
    ++k;
  }

  // Enforce divisibility d_i | d_{i+1} (valid transform on diagonal pairs:
  // diag(a,b) ~ diag(gcd, lcm)).
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const big g = boost::multiprecision::gcd(diag[i], diag[j]);
      if (g == 0) continue;
      const big l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

Matrix to_big(const std::vector<std::vector<std::int64_t>>& m) {
  Matrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    out[i].assign(m[i].begin(), m[i].end());
  return out;
}

std::int64_t to_i64(const big& v) {
  if (v > std::numeric_limits<std::int64_t>::max())
    throw limit_error("invariant factor exceeds 64 bits", v.str(), "int64");
  return static_cast<std::int64_t>(v);
}

struct BoundaryMaps {
  std::vector<std::vector<std::int64_t>> d1;  // edge classes x vertex classes
  std::vector<std::vector<std::int64_t>> d2;  // face classes x edge classes
  int edge_classes = 0;
};

BoundaryMaps boundary_maps(const Skeleton& skel) {
  if (skel.any_edge_reversed())
    throw parse_error(
        "an edge is identified with itself in reverse; the quotient has no "
        "cell structure to take homology of");

  BoundaryMaps maps;
  const int V = skel.vertex_class_count();
  const int E = skel.edge_class_count();
  const int F = skel.face_class_count();
  maps.edge_classes = E;

  maps.d1.assign(E, std::vector<std::int64_t>(V, 0));
  for (int c = 0; c < E; ++c) {
    const int slot = skel.edge_members[c][0];  // representative
    const int tet = slot / 6, e = slot % 6;
    const int u = kEdgeVertices[e][0], v = kEdgeVertices[e][1];
    maps.d1[c][skel.vertex_class[tet * 4 + v]] += 1;
    maps.d1[c][skel.vertex_class[tet * 4 + u]] -= 1;
  }

  maps.d2.assign(F, std::vector<std::int64_t>(E, 0));
  for (int c = 0; c < F; ++c) {
    const int slot = skel.face_members[c][0];
    const int tet = slot / 4, f = slot % 4;
    const auto& cv = kFaceVertices[f];
    // boundary of [v0,v1,v2] = [v1,v2] - [v0,v2] + [v0,v1]
    const std::array<std::array<int, 3>, 3> terms = {{
        {cv[1], cv[2], +1}, {cv[0], cv[2], -1}, {cv[0], cv[1], +1},
    }};
    for (const auto& term : terms) {
      const int es = tet * 6 + edge_index(term[0], term[1]);
      maps.d2[c][skel.edge_class[es]] += term[2] * skel.edge_sign[es];
    }
  }
  return maps;
}

}  // namespace

SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& m) {
  SmithResult r;
  for (const big& d : smith_diagonal(to_big(m))) {
    if (d == 0) continue;
    r.invariant_factors.push_back(to_i64(d));
    ++r.rank;
  }
  return r;
}

int gf2_rank(const std::vector<std::vector<std::int64_t>>& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(m.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] & 1) bits[i][j / 64] ^= (1ull << (j % 64));

  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < bits.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < bits.size() && !(bits[pivot][col / 64] >> (col % 64) & 1)) ++pivot;
    if (pivot == bits.size()) continue;
    std::swap(bits[row], bits[pivot]);
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (i != row && (bits[i][col / 64] >> (col % 64) & 1))
        for (std::size_t w = 0; w < words; ++w) bits[i][w] ^= bits[row][w];
    }
    ++row;
    ++rank;
  }
  return rank;
}

HomologyResult homology_h1(const Triangulation& tri, Coefficients coeffs) {
  return homology_h1(tri, build_skeleton(tri), coeffs);
}

HomologyResult homology_h1(const Triangulation& tri, const Skeleton& skel,
                           Coefficients coeffs) {
  (void)tri;
  const BoundaryMaps maps = boundary_maps(skel);
  HomologyResult r;
  if (coeffs == Coefficients::integers) {
    const SmithResult s1 = smith_normal_form(maps.d1);
    const SmithResult s2 = smith_normal_form(maps.d2);
    r.free_rank = maps.edge_classes - s1.rank - s2.rank;
    for (std::int64_t d : s2.invariant_factors)
      if (d > 1) r.torsion.push_back(d);
  } else {
    r.field_dim = maps.edge_classes - gf2_rank(maps.d1) - gf2_rank(maps.d2);
  }
  return r;
}

std::int64_t kneser_bound(const Triangulation& tri) {
  const Skeleton skel = build_skeleton(tri);
  const HomologyResult z = homology_h1(tri, skel, Coefficients::integers);
  const HomologyResult z2 = homology_h1(tri, skel, Coefficients::mod2);
  return z2.field_dim + z.free_rank + 6ll * tri.tet_count();
}

}  // namespace normalcut
