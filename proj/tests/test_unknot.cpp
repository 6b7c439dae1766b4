#include <doctest.h>

#include <stdexcept>

#include "normalcut/error.hpp"
#include "normalcut/triangulation.hpp"
#include "normalcut/unknot.hpp"
#include "oracles.hpp"

using namespace normalcut;

namespace {
Triangulation load(const char* name) {
  return Triangulation::parse(oracles::read_file(std::string(NORMALCUT_SAMPLES_DIR) + "/" + name));
}
}  // namespace

TEST_CASE("knot-complement check accepts the solid torus and rejects others") {
  CHECK(check_knot_complement(load("solid_torus.json")));
  CHECK_FALSE(check_knot_complement(load("ball.json")));            // sphere boundary
  CHECK_FALSE(check_knot_complement(load("closed_example.json")));  // no boundary
}

TEST_CASE("solid torus is recognized as the unknot complement") {
  UnknotOptions opts;
  const UnknotVerdict v = decide_unknot(load("solid_torus.json"), opts);
  CHECK(v.unknot);
  REQUIRE(v.certificate.has_value());
  CHECK(*v.certificate == NormalVector{1, 0, 0, 1, 1, 0, 0});
  CHECK(v.diagnostics.fundamental_count == 5);
  CHECK(v.diagnostics.admissible_count == 4);
  CHECK(v.diagnostics.disk_count == 2);
  CHECK(v.diagnostics.essential_disk_count == 1);
  REQUIRE(v.diagnostics.min_spanning_genus_found.has_value());
  CHECK(*v.diagnostics.min_spanning_genus_found == 0);
}

TEST_CASE("the certificate re-verifies through the reconstruction pipeline") {
  const Triangulation tri = load("solid_torus.json");
  UnknotOptions opts;
  const UnknotVerdict v = decide_unknot(tri, opts);
  REQUIRE(v.certificate.has_value());
  const MatchingSystem sys = matching_system(tri);
  CHECK(is_admissible(sys, *v.certificate));
  const SurfaceReport rep = reconstruct(tri, *v.certificate);
  CHECK(rep.connected());
  CHECK(rep.euler == 1);
  REQUIRE(rep.boundary_curves.size() == 1);
  CHECK(rep.boundary_curves[0].essential);
}

TEST_CASE("worker threads do not change the verdict") {
  UnknotOptions serial, parallel;
  parallel.jobs = 4;
  const UnknotVerdict a = decide_unknot(load("solid_torus.json"), serial);
  const UnknotVerdict b = decide_unknot(load("solid_torus.json"), parallel);
  CHECK(a.unknot == b.unknot);
  CHECK(a.certificate == b.certificate);
  CHECK(a.diagnostics.fundamental_count == b.diagnostics.fundamental_count);
  CHECK(a.diagnostics.admissible_count == b.diagnostics.admissible_count);
  CHECK(a.diagnostics.disk_count == b.diagnostics.disk_count);
  CHECK(a.diagnostics.essential_disk_count == b.diagnostics.essential_disk_count);
}

TEST_CASE("non-complement inputs are rejected up front") {
  UnknotOptions opts;
  CHECK_THROWS_AS(decide_unknot(load("ball.json"), opts), std::invalid_argument);
  CHECK_THROWS_AS(decide_unknot(load("closed_example.json"), opts), std::invalid_argument);
}

TEST_CASE("enumeration cap propagates out of the decision") {
  UnknotOptions opts;
  opts.limits.box_volume_cap = 10;
  CHECK_THROWS_AS(decide_unknot(load("solid_torus.json"), opts), limit_error);
}

TEST_CASE("a cap blocking only the unrestricted box still yields the verdict") {
  // The solid torus has per-pattern boxes of at most 72 lattice points but an
  // unrestricted box of 1458: a cap between the two lets the decision go
  // through while the full fundamental count stays unreported.
  UnknotOptions opts;
  opts.limits.box_volume_cap = 100;
  const UnknotVerdict v = decide_unknot(load("solid_torus.json"), opts);
  CHECK(v.unknot);
  REQUIRE(v.certificate.has_value());
  CHECK(*v.certificate == NormalVector{1, 0, 0, 1, 1, 0, 0});
  CHECK_FALSE(v.diagnostics.fundamental_count.has_value());
  CHECK(v.diagnostics.admissible_count == 4);
  CHECK(v.diagnostics.essential_disk_count == 1);
}

TEST_CASE("the knotted sample complement is decided without full enumeration") {
  // The shipped knotted complement has an unrestricted search box of ~2.3e47
  // lattice points, far beyond any feasible cap, while its per-pattern boxes
  // stay under 1e11.  The decision must come back Knotted with no disk
  // certificate; the smallest essential orientable spanning surface found is
  // a once-punctured torus (genus one), as expected for this knot.
  UnknotOptions opts;
  opts.limits.box_volume_cap = 100'000'000'000;
  const UnknotVerdict v = decide_unknot(load("trefoil_complement.json"), opts);
  CHECK_FALSE(v.unknot);
  CHECK_FALSE(v.certificate.has_value());
  CHECK_FALSE(v.diagnostics.fundamental_count.has_value());
  CHECK(v.diagnostics.admissible_count == 11);
  CHECK(v.diagnostics.disk_count == 1);  // the boundary-vertex link
  CHECK(v.diagnostics.essential_disk_count == 0);
  REQUIRE(v.diagnostics.min_spanning_genus_found.has_value());
  CHECK(*v.diagnostics.min_spanning_genus_found == 1);
}
