#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "normalcut/enumeration.hpp"
#include "normalcut/error.hpp"

// Extreme rays of {x >= 0, Ax = 0} by the double description method: start
// from the coordinate orthant (rays = unit vectors) and intersect with one
// matching hyperplane at a time.  All arithmetic is exact.

namespace normalcut {

namespace {

using big = boost::multiprecision::cpp_int;
using Ray = std::vector<big>;

// Tight x_i >= 0 constraints, packed.  The cone stays inside every processed
// hyperplane, so coordinate zero-sets are the only discriminating data.
struct ZeroSet {
  std::vector<std::uint64_t> w;
  bool contains(const ZeroSet& o) const {  // this >= o as sets
    for (std::size_t k = 0; k < w.size(); ++k)
      if ((o.w[k] & ~w[k]) != 0) return false;
    return true;
  }
  ZeroSet meet(const ZeroSet& o) const {
    ZeroSet r;
    r.w.resize(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) r.w[k] = w[k] & o.w[k];
    return r;
  }
};

ZeroSet zero_set(const Ray& r) {
  ZeroSet z;
  z.w.assign((r.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] == 0) z.w[i / 64] |= (1ull << (i % 64));
  return z;
}

void gcd_reduce(Ray& r) {
  big g = 0;
  for (const big& v : r) g = boost::multiprecision::gcd(g, v);
  if (g > 1)
    for (big& v : r) v /= g;
}

// Rays p and n span a 2-face iff no third extreme ray is tight on every
// constraint both of them are tight on (valid for pointed cones).
bool adjacent(const std::vector<ZeroSet>& zs, std::size_t a, std::size_t b) {
  const ZeroSet common = zs[a].meet(zs[b]);
  for (std::size_t c = 0; c < zs.size(); ++c)
    if (c != a && c != b && zs[c].contains(common)) return false;
  return true;
}

}  // namespace

VertexSolutionSet vertex_solutions(const MatchingSystem& sys) {
  const std::size_t d = sys.coord_count;
  std::vector<Ray> rays(d);
  for (std::size_t i = 0; i < d; ++i) {
    rays[i].assign(d, 0);
    rays[i][i] = 1;
  }

  for (const MatchingRow& row : sys.rows) {
    std::vector<big> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      big s = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (row.coeffs[i] != 0) s += row.coeffs[i] * rays[r][i];
      val[r] = std::move(s);
    }

    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] > 0)
        pos.push_back(r);
      else if (val[r] < 0)
        neg.push_back(r);
      else
        zero.push_back(r);
    }
    if (pos.empty() && neg.empty()) continue;  // hyperplane already contains the cone

    std::vector<ZeroSet> zs(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) zs[r] = zero_set(rays[r]);

    std::vector<Ray> next;
    next.reserve(zero.size() + pos.size() * neg.size());
    for (std::size_t r : zero) next.push_back(std::move(rays[r]));
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        if (!adjacent(zs, p, n)) continue;
        Ray w(d);
        for (std::size_t i = 0; i < d; ++i)
          w[i] = val[p] * rays[n][i] - val[n] * rays[p][i];
        gcd_reduce(w);
        next.push_back(std::move(w));
      }
    rays = std::move(next);
  }

  VertexSolutionSet out;
  out.vertices.reserve(rays.size());
  for (const Ray& r : rays) {
    NormalVector v(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (r[i] > std::numeric_limits<std::int64_t>::max())
        throw limit_error("vertex solution coordinate exceeds 64 bits",
                          r[i].str(),
                          std::to_string(std::numeric_limits<std::int64_t>::max()));
      v[i] = static_cast<std::int64_t>(r[i]);
    }
    out.vertices.push_back(std::move(v));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()),
                     out.vertices.end());
  return out;
}

}  // namespace normalcut
