#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normalcut/tables.hpp"

namespace normalcut {

// Bijection of {0,1,2,3}; used as the vertex map of a face gluing, extended
// so the glued face index maps to the partner face index.
struct Perm4 {
  std::array<std::int8_t, 4> img{0, 1, 2, 3};

  int operator[](int v) const { return img[v]; }
  bool is_permutation() const;
  Perm4 inverse() const;
  Perm4 then(const Perm4& next) const;  // apply *this first, then next
  bool operator==(const Perm4&) const = default;
};

// One glued side of a face: the partner tetrahedron/face plus the vertex map
// from this tetrahedron into the partner.
struct Gluing {
  int tet = -1;
  int face = -1;
  Perm4 map;
};

// Raw gluing record as it appears in input files:
// (tet_a, face_a, tet_b, face_b, images of face_a's vertices in increasing
// order as vertices of tet_b).
struct GluingSpec {
  int tet_a = 0;
  int face_a = 0;
  int tet_b = 0;
  int face_b = 0;
  std::array<int, 3> images{};
};

class Triangulation {
 public:
  // Validates index ranges, rejects faces glued to themselves, rejects a
  // face appearing in two distinct identifications, and requires records
  // for both directions of one identification to be mutually inverse.
  // Throws parse_error.
  Triangulation(int tet_count, const std::vector<GluingSpec>& gluings);

  // Reads the JSON object {"tets": t, "gluings": [[ta,fa,tb,fb,[p0,p1,p2]],...]}.
  static Triangulation parse(std::string_view json_text);

  int tet_count() const { return tet_count_; }
  std::size_t coord_count() const {
    return static_cast<std::size_t>(tet_count_) * kDiskTypesPerTet;
  }

  bool is_glued(int tet, int face) const { return glue_at(tet, face).has_value(); }
  bool is_boundary_face(int tet, int face) const { return !is_glued(tet, face); }
  // Valid only when glued.
  const Gluing& gluing(int tet, int face) const { return *glue_at(tet, face); }

  std::vector<std::pair<int, int>> boundary_faces() const;
  int boundary_face_count() const;
  // Number of distinct interior face identifications (each counted once).
  int interior_identification_count() const;

  // The gluing records in canonical one-direction-per-identification form,
  // ordered by (tet_a, face_a) of the lexicographically smaller side.
  std::vector<GluingSpec> canonical_gluings() const;

 private:
  const std::optional<Gluing>& glue_at(int tet, int face) const {
    return glue_[static_cast<std::size_t>(tet) * 4 + face];
  }

  int tet_count_ = 0;
  std::vector<std::optional<Gluing>> glue_;  // tet*4+face -> partner side
};

// Test/utility helper: relabel tetrahedra by perm (new index = perm[old]).
Triangulation relabel_tetrahedra(const Triangulation& tri,
                                 const std::vector<int>& perm);

}  // namespace normalcut
