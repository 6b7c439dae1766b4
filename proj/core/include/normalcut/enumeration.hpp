#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "normalcut/normal_surface.hpp"

namespace normalcut {

struct EnumerationLimits {
  // Ceiling on the number of lattice points of the search box
  // prod_i (bound_i + 1); exceeding it raises limit_error.
  std::int64_t box_volume_cap = 10'000'000;
};

struct VertexSolutionSet {
  // Minimal integer representatives of the extreme rays of
  // {x >= 0, Ax = 0}, sorted lexicographically.
  std::vector<NormalVector> vertices;
};

VertexSolutionSet vertex_solutions(const MatchingSystem& sys);

struct FundamentalSet {
  // All pointwise-minimal nonzero lattice solutions, sorted lexicographically.
  std::vector<NormalVector> solutions;
  // Per-coordinate search bound (sum of the vertex solutions).
  NormalVector box_bounds;
  // prod (bound_i + 1) as a decimal string (can exceed 64 bits).
  std::string box_volume;
  // Lattice points of the box satisfying Ax = 0 that the scan visited.
  std::int64_t candidates_scanned = 0;
};

// Every non-negative integer solution of Ax = 0 is a non-negative integer
// combination of the returned set.  Throws limit_error when the search box
// has more lattice points than limits.box_volume_cap.
FundamentalSet fundamental_solutions(const MatchingSystem& sys,
                                     const EnumerationLimits& limits);

// The subset of fundamental solutions satisfying the quad condition.
std::vector<NormalVector> admissible_fundamentals(const FundamentalSet& fs);

// Same set as admissible_fundamentals(fundamental_solutions(...)), computed
// by scanning one quad-support pattern at a time (at most one quad type per
// tetrahedron is allowed to be nonzero, so incompatible patterns are pruned
// up front).  Each pattern's box is bounded by the vertex solutions supported
// in that pattern and the cap applies to each restricted box separately, so
// this usually succeeds even when the unrestricted box exceeds the cap.
std::vector<NormalVector> admissible_fundamentals_direct(
    const MatchingSystem& sys, const EnumerationLimits& limits);

}  // namespace normalcut
