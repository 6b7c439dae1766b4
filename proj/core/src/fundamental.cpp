#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "normalcut/enumeration.hpp"
#include "normalcut/error.hpp"
#include "normalcut/tables.hpp"

// Fundamental (= pointwise-minimal nonzero) lattice solutions of the
// matching equations.  Every fundamental solution is bounded coordinatewise
// by the sum of the vertex solutions, so an exhaustive scan of that box with
// interval pruning finds them all; minimality is then checked directly.

namespace normalcut {

namespace {

using big = boost::multiprecision::cpp_int;

big box_volume_of(const NormalVector& bounds) {
  big vol = 1;
  for (std::int64_t b : bounds) vol *= (b + 1);
  return vol;
}

struct ScanResult {
  std::vector<NormalVector> solutions;  // nonzero, in DFS (= lex) order
  std::int64_t visited = 0;             // leaves reached, zero vector included
};

// Depth-first scan over the box.  partial[r] tracks row r's value on the
// assigned prefix; a branch dies as soon as some row can no longer reach 0.
// Row values stay inside [min_tail[r][0], max_tail[r][0]], so the up-front
// magnitude check makes the int64 arithmetic below exact.
ScanResult scan_box(const MatchingSystem& sys, const NormalVector& bounds) {
  const std::size_t d = sys.coord_count;
  const std::size_t m = sys.rows.size();

  // min_tail/max_tail[r][i]: extreme contributions of coordinates >= i.
  std::vector<std::vector<std::int64_t>> min_tail(m, std::vector<std::int64_t>(d + 1, 0));
  std::vector<std::vector<std::int64_t>> max_tail(m, std::vector<std::int64_t>(d + 1, 0));
  const big guard = std::numeric_limits<std::int64_t>::max() / 2;
  for (std::size_t r = 0; r < m; ++r) {
    big lo = 0, hi = 0;
    for (std::size_t i = d; i-- > 0;) {
      const std::int64_t c = sys.rows[r].coeffs[i];
      if (c < 0) lo += big(c) * bounds[i];
      if (c > 0) hi += big(c) * bounds[i];
      if (-lo > guard || hi > guard)
        throw limit_error("matching row range exceeds 63 bits",
                          big(hi - lo).str(), guard.str());
      min_tail[r][i] = static_cast<std::int64_t>(lo);
      max_tail[r][i] = static_cast<std::int64_t>(hi);
    }
  }
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> touching(d);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < d; ++i)
      if (sys.rows[r].coeffs[i] != 0) touching[i].push_back({r, sys.rows[r].coeffs[i]});

  ScanResult out;
  NormalVector x(d, 0);
  std::vector<std::int64_t> partial(m, 0);

  auto feasible = [&](std::size_t i) {
    for (std::size_t r = 0; r < m; ++r)
      if (partial[r] + min_tail[r][i] > 0 || partial[r] + max_tail[r][i] < 0)
        return false;
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == d) {
      ++out.visited;
      if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v != 0; }))
        out.solutions.push_back(x);
      return;
    }
    for (std::int64_t v = 0; v <= bounds[i]; ++v) {
      x[i] = v;
      if (v > 0)
        for (auto [r, c] : touching[i]) partial[r] += c;
      if (feasible(i + 1)) self(self, i + 1);
    }
    for (auto [r, c] : touching[i]) partial[r] -= c * bounds[i];
    x[i] = 0;
  };
  if (feasible(0)) rec(rec, 0);
  return out;
}

// Keeps exactly the pointwise-minimal vectors.  Strict domination implies a
// strictly smaller coordinate sum, so scanning in sum order lets each vector
// be tested against already-accepted minimal ones only.
std::vector<NormalVector> minimal_filter(std::vector<NormalVector> sols) {
  auto sum = [](const NormalVector& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
  };
  std::sort(sols.begin(), sols.end(),
            [&](const NormalVector& a, const NormalVector& b) {
              const auto sa = sum(a), sb = sum(b);
              return sa != sb ? sa < sb : a < b;
            });
  std::vector<NormalVector> minimal;
  for (const NormalVector& v : sols) {
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(), [&](const NormalVector& w) {
          for (std::size_t i = 0; i < v.size(); ++i)
            if (w[i] > v[i]) return false;
          return true;
        });
    if (!dominated) minimal.push_back(v);
  }
  return minimal;
}

}  // namespace

FundamentalSet fundamental_solutions(const MatchingSystem& sys,
                                     const EnumerationLimits& limits) {
  const VertexSolutionSet vs = vertex_solutions(sys);

  FundamentalSet out;
  out.box_bounds.assign(sys.coord_count, 0);
  for (const NormalVector& v : vs.vertices)
    for (std::size_t i = 0; i < sys.coord_count; ++i) out.box_bounds[i] += v[i];

  const big vol = box_volume_of(out.box_bounds);
  out.box_volume = vol.str();
  if (vol > limits.box_volume_cap)
    throw limit_error("search box exceeds the lattice-point cap", vol.str(),
                      std::to_string(limits.box_volume_cap));

  ScanResult scan = scan_box(sys, out.box_bounds);
  out.candidates_scanned = scan.visited;
  out.solutions = minimal_filter(std::move(scan.solutions));
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

std::vector<NormalVector> admissible_fundamentals(const FundamentalSet& fs) {
  std::vector<NormalVector> out;
  for (const NormalVector& v : fs.solutions)
    if (satisfies_quad_condition(v)) out.push_back(v);
  return out;
}

std::vector<NormalVector> admissible_fundamentals_direct(
    const MatchingSystem& sys, const EnumerationLimits& limits) {
  const VertexSolutionSet vs = vertex_solutions(sys);

  // One allowed quad type per tetrahedron (3^t patterns).  The solutions
  // whose quad support fits a pattern form a face of the solution cone (the
  // cone cut by "other quads = 0"), and the extreme rays of a face are
  // exactly the vertex solutions lying on it.  So inside each pattern the
  // sum-of-vertex-solutions box bound holds with only the pattern-supported
  // vertex solutions, which keeps the per-pattern boxes small even when the
  // unrestricted box is astronomically large.  A fundamental solution with
  // no quad in some tetrahedron shows up under several patterns; the final
  // dedupe removes the copies.  Minimality within a pattern equals global
  // minimality: anything dominated by a pattern-supported vector is itself
  // pattern-supported, coordinatewise.
  const int t = sys.tet_count;
  std::vector<NormalVector> all;
  std::vector<int> pattern(t, 0);
  for (;;) {
    NormalVector bounds(sys.coord_count, 0);
    for (const NormalVector& v : vs.vertices) {
      bool supported = true;
      for (int tet = 0; tet < t && supported; ++tet)
        for (int q = 0; q < 3; ++q)
          if (q != pattern[tet] && v[coord_index(tet, 4 + q)] != 0) {
            supported = false;
            break;
          }
      if (!supported) continue;
      for (std::size_t i = 0; i < sys.coord_count; ++i) bounds[i] += v[i];
    }

    const big vol = box_volume_of(bounds);
    if (vol > limits.box_volume_cap)
      throw limit_error("restricted search box exceeds the lattice-point cap",
                        vol.str(), std::to_string(limits.box_volume_cap));
    std::vector<NormalVector> sols = minimal_filter(scan_box(sys, bounds).solutions);
    all.insert(all.end(), sols.begin(), sols.end());

    int k = 0;
    while (k < t && pattern[k] == 2) pattern[k++] = 0;
    if (k == t) break;
    ++pattern[k];
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace normalcut
