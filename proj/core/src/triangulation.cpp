#include "normalcut/triangulation.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "normalcut/error.hpp"

namespace normalcut {

bool Perm4::is_permutation() const {
  std::array<bool, 4> seen{};
  for (int v = 0; v < 4; ++v) {
    const int w = img[v];
    if (w < 0 || w > 3 || seen[w]) return false;
    seen[w] = true;
  }
  return true;
}

Perm4 Perm4::inverse() const {
  Perm4 r;
  for (int v = 0; v < 4; ++v) r.img[img[v]] = static_cast<std::int8_t>(v);
  return r;
}

Perm4 Perm4::then(const Perm4& next) const {
  Perm4 r;
  for (int v = 0; v < 4; ++v) r.img[v] = next.img[img[v]];
  return r;
}

namespace {

std::string side_name(int tet, int face) {
  return "tet " + std::to_string(tet) + " face " + std::to_string(face);
}

// Extends the file-format triple (images of the face's vertices in
// increasing order) to a Perm4 sending face_a to face_b.
Perm4 record_to_perm(const GluingSpec& g) {
  Perm4 p;
  const auto& cv = kFaceVertices[g.face_a];
  for (int k = 0; k < 3; ++k) p.img[cv[k]] = static_cast<std::int8_t>(g.images[k]);
  p.img[g.face_a] = static_cast<std::int8_t>(g.face_b);
  return p;
}

}  // namespace

Triangulation::Triangulation(int tet_count, const std::vector<GluingSpec>& gluings)
    : tet_count_(tet_count), glue_(static_cast<std::size_t>(tet_count) * 4) {
  if (tet_count < 1) throw parse_error("tets must be >= 1");
  for (std::size_t i = 0; i < gluings.size(); ++i) {
    const GluingSpec& g = gluings[i];
    const std::string where = "gluings[" + std::to_string(i) + "]: ";
    auto in_range = [&](int tet, int face) {
      return tet >= 0 && tet < tet_count && face >= 0 && face < 4;
    };
    if (!in_range(g.tet_a, g.face_a) || !in_range(g.tet_b, g.face_b))
      throw parse_error(where + "index out of range");
    if (g.tet_a == g.tet_b && g.face_a == g.face_b)
      throw parse_error(where + "face glued to itself (" + side_name(g.tet_a, g.face_a) + ")");

    const Perm4 perm = record_to_perm(g);
    if (!perm.is_permutation())
      throw parse_error(where + "vertex map is not a bijection");
    // The three images must be exactly the vertices of face_b.
    for (int k = 0; k < 3; ++k)
      if (g.images[k] == g.face_b)
        throw parse_error(where + "vertex map sends a face vertex to the vertex opposite " +
                          side_name(g.tet_b, g.face_b));

    auto& fwd = glue_[static_cast<std::size_t>(g.tet_a) * 4 + g.face_a];
    const Gluing record{g.tet_b, g.face_b, perm};
    if (fwd.has_value()) {
      if (fwd->tet != record.tet || fwd->face != record.face || !(fwd->map == record.map))
        throw parse_error(where + side_name(g.tet_a, g.face_a) +
                          " already glued differently (duplicate gluing)");
      continue;  // identical duplicate record
    }
    // Install both directions; a later explicit reverse record must agree.
    fwd = record;
    auto& rev = glue_[static_cast<std::size_t>(g.tet_b) * 4 + g.face_b];
    const Gluing inverse_record{g.tet_a, g.face_a, perm.inverse()};
    if (rev.has_value()) {
      if (rev->tet != inverse_record.tet || rev->face != inverse_record.face ||
          !(rev->map == inverse_record.map))
        throw parse_error(where + "the two directions of the identification of " +
                          side_name(g.tet_a, g.face_a) + " and " + side_name(g.tet_b, g.face_b) +
                          " are not mutually inverse");
    } else {
      rev = inverse_record;
    }
  }
}

Triangulation Triangulation::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw parse_error("top level must be a JSON object");
  if (!doc.contains("tets") || !doc["tets"].is_number_integer())
    throw parse_error("missing integer field \"tets\"");
  const int tets = doc["tets"].get<int>();
  std::vector<GluingSpec> specs;
  if (doc.contains("gluings")) {
    if (!doc["gluings"].is_array()) throw parse_error("\"gluings\" must be an array");
    for (std::size_t i = 0; i < doc["gluings"].size(); ++i) {
      const auto& rec = doc["gluings"][i];
      const std::string where = "gluings[" + std::to_string(i) + "]: ";
      if (!rec.is_array() || rec.size() != 5)
        throw parse_error(where + "expected [tet_a, face_a, tet_b, face_b, [p0,p1,p2]]");
      for (int k = 0; k < 4; ++k)
        if (!rec[k].is_number_integer()) throw parse_error(where + "indices must be integers");
      if (!rec[4].is_array() || rec[4].size() != 3)
        throw parse_error(where + "vertex map must be an array of 3 integers");
      GluingSpec g;
      g.tet_a = rec[0].get<int>();
      g.face_a = rec[1].get<int>();
      g.tet_b = rec[2].get<int>();
      g.face_b = rec[3].get<int>();
      for (int k = 0; k < 3; ++k) {
        if (!rec[4][k].is_number_integer()) throw parse_error(where + "vertex map entries must be integers");
        g.images[k] = rec[4][k].get<int>();
        if (g.images[k] < 0 || g.images[k] > 3)
          throw parse_error(where + "vertex map entries must be in 0..3");
      }
      specs.push_back(g);
    }
  }
  return Triangulation(tets, specs);
}

std::vector<std::pair<int, int>> Triangulation::boundary_faces() const {
  std::vector<std::pair<int, int>> out;
  for (int t = 0; t < tet_count_; ++t)
    for (int f = 0; f < 4; ++f)
      if (!is_glued(t, f)) out.emplace_back(t, f);
  return out;
}

int Triangulation::boundary_face_count() const {
  return static_cast<int>(boundary_faces().size());
}

int Triangulation::interior_identification_count() const {
  return (tet_count_ * 4 - boundary_face_count()) / 2;
}

std::vector<GluingSpec> Triangulation::canonical_gluings() const {
  std::vector<GluingSpec> out;
  for (int t = 0; t < tet_count_; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (!is_glued(t, f)) continue;
      const Gluing& g = gluing(t, f);
      if (g.tet < t || (g.tet == t && g.face < f)) continue;  // emit smaller side only
      GluingSpec spec;
      spec.tet_a = t;
      spec.face_a = f;
      spec.tet_b = g.tet;
      spec.face_b = g.face;
      const auto& cv = kFaceVertices[f];
      for (int k = 0; k < 3; ++k) spec.images[k] = g.map[cv[k]];
      out.push_back(spec);
    }
  }
  return out;
}

Triangulation relabel_tetrahedra(const Triangulation& tri, const std::vector<int>& perm) {
  std::vector<GluingSpec> specs;
  for (const GluingSpec& g : tri.canonical_gluings()) {
    GluingSpec r = g;
    r.tet_a = perm[g.tet_a];
    r.tet_b = perm[g.tet_b];
    specs.push_back(r);
  }
  return Triangulation(tri.tet_count(), specs);
}

}  // namespace normalcut
