#pragma once

#include <cstdint>
#include <vector>

#include "normalcut/skeleton.hpp"
#include "normalcut/triangulation.hpp"

namespace normalcut {

enum class Coefficients { integers, mod2 };

struct HomologyResult {
  // Filled for Coefficients::integers.
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;  // invariant factors > 1, divisibility order

  // Filled for Coefficients::mod2.
  std::int64_t field_dim = 0;
};

// First homology of the quotient cell structure (one cell per identification
// class).  Throws parse_error when an edge class is identified with itself in
// reverse, since the quotient has no usable cell structure there.
HomologyResult homology_h1(const Triangulation& tri, Coefficients coeffs);
HomologyResult homology_h1(const Triangulation& tri, const Skeleton& skel,
                           Coefficients coeffs);

// dim H1(M;Z/2) + free rank of H1(M;Z) + 6t: an upper bound for the number
// of pairwise disjoint, pairwise non-parallel normal surfaces the manifold
// can contain.
std::int64_t kneser_bound(const Triangulation& tri);

// Exact Smith normal form over arbitrary-precision integers.
struct SmithResult {
  std::vector<std::int64_t> invariant_factors;  // nonzero factors only
  int rank = 0;
};

SmithResult smith_normal_form(const std::vector<std::vector<std::int64_t>>& m);

// Rank of a 0/1 matrix over GF(2).
int gf2_rank(const std::vector<std::vector<std::int64_t>>& m);

}  // namespace normalcut
