#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace normalcut {

// Planar diagram of a knot.  Crossings list the four incident edge labels
// counterclockwise starting from the incoming under-strand; edge labels are
// 1..2c in traversal order.  The 0-crossing unknot is the special token
// "unknot" (crossings empty, arc_count 1).
struct KnotDiagram {
  std::vector<std::array<int, 4>> crossings;
  int arc_count = 0;  // number of edge labels (2c; 1 for the unknot token)

  int crossing_count() const { return static_cast<int>(crossings.size()); }
};

// Accepts a JSON array of 4-element arrays, or the JSON string "unknot".
// Validates: labels 1..2c each appearing exactly twice, under-strand
// continuation c = a+1 (mod 2c), over-strand labels adjacent (single
// component).  Throws parse_error.
KnotDiagram parse_pd(std::string_view json_text);

// One generator per arc of the diagram (edge labels merged along the
// over-strand), one conjugation relation per crossing.
struct WirtingerRelation {
  int out = 0;   // generator index of the outgoing under-arc
  int in = 0;    // generator index of the incoming under-arc
  int over = 0;  // generator index of the over-arc
  int sign = 1;  // +1: out = over in over^-1;  -1: out = over^-1 in over
};

struct WirtingerPresentation {
  int generator_count = 0;
  std::vector<WirtingerRelation> relations;
  // smallest edge label of each arc, per generator (stable naming)
  std::vector<int> arc_labels;
};

// Throws parse_error when the abelianization does not have rank 1 (internal
// self-check; cannot happen for diagrams parse_pd accepts).
WirtingerPresentation wirtinger_presentation(const KnotDiagram& diagram);

// Permutation of {0..n-1} in one-line notation.
using Permutation = std::vector<int>;

struct PermutationAssignment {
  int n = 0;
  std::vector<Permutation> images;  // per generator
  std::int64_t image_order = 0;     // order of the generated subgroup
};

// Cycle notation with 1-based points, fixed points omitted; "()" for the
// identity.
std::string cycle_notation(const Permutation& p);

// Searches S_n for n = 3..n_max for a relation-satisfying assignment whose
// image subgroup is not cyclic.  All generators of a Wirtinger presentation
// are conjugate, so all images are drawn from a single conjugacy class per
// branch.  Deterministic first-found result; std::nullopt when no such
// assignment exists up to n_max.  Throws std::invalid_argument if n_max < 3.
std::optional<PermutationAssignment> find_noncyclic_rep(
    const WirtingerPresentation& pres, int n_max);

}  // namespace normalcut
