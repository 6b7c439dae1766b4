#include <doctest.h>

#include <stdexcept>

#include "normalcut/error.hpp"
#include "normalcut/wirtinger.hpp"
#include "oracles.hpp"

using namespace normalcut;

namespace {
std::string sample(const char* name) {
  return oracles::read_file(std::string(NORMALCUT_SAMPLES_DIR) + "/pd/" + name);
}
}  // namespace

TEST_CASE("trefoil planar diagram parses") {
  const KnotDiagram d = parse_pd(sample("trefoil.json"));
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count == 6);
}

TEST_CASE("figure-eight planar diagram parses") {
  const KnotDiagram d = parse_pd(sample("figure8.json"));
  CHECK(d.crossing_count() == 4);
  CHECK(d.arc_count == 8);
}

TEST_CASE("unknot token parses to the crossing-free diagram") {
  const KnotDiagram d = parse_pd("\"unknot\"");
  CHECK(d.crossing_count() == 0);
  CHECK(d.arc_count == 1);
}

TEST_CASE("malformed planar diagrams are rejected") {
  CHECK_THROWS_AS(parse_pd("nonsense"), parse_error);
  CHECK_THROWS_AS(parse_pd("{}"), parse_error);
  CHECK_THROWS_AS(parse_pd("\"knot\""), parse_error);
  CHECK_THROWS_AS(parse_pd("[[1,2,3]]"), parse_error);  // not 4 entries
  CHECK_THROWS_AS(parse_pd("[[1,2,3,9]]"), parse_error);  // label out of range
  // label appearing once and another three times
  CHECK_THROWS_AS(parse_pd("[[1,1,2,1],[2,3,4,3]]"), parse_error);
  // under-strand not continued by the successor label
  CHECK_THROWS_AS(parse_pd("[[1,4,3,5],[3,6,2,1],[5,2,6,4]]"), parse_error);
  // over-strand labels not adjacent
  CHECK_THROWS_AS(parse_pd("[[1,3,2,5],[3,6,4,1],[5,2,6,4]]"), parse_error);
}

TEST_CASE("a two-component link passes local checks but fails the rank self-check") {
  const KnotDiagram link = parse_pd("[[1,3,2,4],[3,1,4,2]]");
  CHECK(link.crossing_count() == 2);
  CHECK_THROWS_AS(wirtinger_presentation(link), parse_error);
}

TEST_CASE("trefoil presentation has three conjugation relations") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd(sample("trefoil.json")));
  CHECK(pres.generator_count == 3);
  CHECK(pres.relations.size() == 3);
  // over-strand merges pair the labels {1,6}, {2,3}, {4,5}
  CHECK(pres.arc_labels == std::vector<int>{1, 2, 4});
  for (const auto& rel : pres.relations) CHECK(rel.sign == 1);
}

TEST_CASE("figure-eight presentation has four generators and relations") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd(sample("figure8.json")));
  CHECK(pres.generator_count == 4);
  CHECK(pres.relations.size() == 4);
}

TEST_CASE("unknot token yields the free presentation on one generator") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd("\"unknot\""));
  CHECK(pres.generator_count == 1);
  CHECK(pres.relations.empty());
  CHECK(pres.arc_labels == std::vector<int>{1});
}

TEST_CASE("cycle notation formats permutations") {
  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({1, 0, 2}) == "(1 2)");
  CHECK(cycle_notation({1, 2, 0}) == "(1 2 3)");
  CHECK(cycle_notation({1, 0, 3, 2}) == "(1 2)(3 4)");
}

TEST_CASE("trefoil gets a noncyclic image in S_3") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd(sample("trefoil.json")));
  const auto rep = find_noncyclic_rep(pres, 5);
  REQUIRE(rep.has_value());
  CHECK(rep->n == 3);
  CHECK(rep->image_order == 6);
  REQUIRE(rep->images.size() == 3);
  CHECK(cycle_notation(rep->images[0]) == "(2 3)");
  CHECK(cycle_notation(rep->images[1]) == "(1 2)");
  CHECK(cycle_notation(rep->images[2]) == "(1 3)");
}

TEST_CASE("figure-eight gets a noncyclic image by n = 5") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd(sample("figure8.json")));
  const auto rep = find_noncyclic_rep(pres, 5);
  REQUIRE(rep.has_value());
  CHECK(rep->n == 4);
  CHECK(rep->image_order == 12);
}

TEST_CASE("certificates re-verify independently") {
  for (const char* name : {"trefoil.json", "figure8.json"}) {
    CAPTURE(name);
    const WirtingerPresentation pres = wirtinger_presentation(parse_pd(sample(name)));
    const auto rep = find_noncyclic_rep(pres, 5);
    REQUIRE(rep.has_value());
    // every relation holds under an independent evaluation
    for (const auto& rel : pres.relations) CHECK(oracles::relation_holds(rel, rep->images));
    // some pair of images fails to commute, so the image cannot be cyclic
    bool noncommuting = false;
    for (std::size_t i = 0; i < rep->images.size() && !noncommuting; ++i)
      for (std::size_t j = i + 1; j < rep->images.size() && !noncommuting; ++j)
        noncommuting = !oracles::commute(rep->images[i], rep->images[j]);
    CHECK(noncommuting);
    // all images share a cycle type (the generators are conjugate)
    auto type_of = [](const Permutation& p) {
      std::vector<int> seen(p.size(), 0), lens;
      for (std::size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(p[c])) {
          seen[c] = 1;
          ++len;
        }
        lens.push_back(len);
      }
      std::sort(lens.begin(), lens.end());
      return lens;
    };
    for (std::size_t i = 1; i < rep->images.size(); ++i)
      CHECK(type_of(rep->images[i]) == type_of(rep->images[0]));
  }
}

TEST_CASE("one-generator presentation admits no noncyclic image") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd("\"unknot\""));
  CHECK_FALSE(find_noncyclic_rep(pres, 5).has_value());
}

TEST_CASE("n_max below 3 is rejected") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd("\"unknot\""));
  CHECK_THROWS_AS(find_noncyclic_rep(pres, 2), std::invalid_argument);
}

TEST_CASE("search is deterministic") {
  const WirtingerPresentation pres = wirtinger_presentation(parse_pd(sample("figure8.json")));
  const auto a = find_noncyclic_rep(pres, 5);
  const auto b = find_noncyclic_rep(pres, 5);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->n == b->n);
  CHECK(a->images == b->images);
  CHECK(a->image_order == b->image_order);
}
