#include <doctest.h>

#include "normalcut/error.hpp"
#include "normalcut/json_io.hpp"
#include "oracles.hpp"

using namespace normalcut;

TEST_CASE("checksum implements 64-bit FNV-1a") {
  // published test vectors for the FNV-1a 64-bit hash
  CHECK(checksum("") == "fnv1a64:cbf29ce484222325");
  CHECK(checksum("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(checksum("abc") == "fnv1a64:e71fa2190541574b");
  CHECK(checksum("foobar") == "fnv1a64:85944171f73967e8");
}

TEST_CASE("normal vector files round-trip") {
  const NormalVector x = {1, 0, 0, 1, 1, 0, 0};
  const std::string sum = checksum("{\"tets\": 1}");
  const std::string text = serialize_normal_vector(x, sum);
  const NormalVectorFile back = parse_normal_vector(text);
  CHECK(back.coords == x);
  CHECK(back.triangulation_checksum == sum);
}

TEST_CASE("serialization is stable") {
  const NormalVector x = {0, 2, 5};
  CHECK(serialize_normal_vector(x, "fnv1a64:0") ==
        serialize_normal_vector(x, "fnv1a64:0"));
}

TEST_CASE("parse rejects malformed certificate files") {
  CHECK_THROWS_AS(parse_normal_vector("nonsense"), parse_error);
  CHECK_THROWS_AS(parse_normal_vector("[]"), parse_error);
  CHECK_THROWS_AS(parse_normal_vector("{\"coords\": [1]}"), parse_error);  // no checksum
  CHECK_THROWS_AS(parse_normal_vector(
                      "{\"schema_version\": 1, \"triangulation_checksum\": \"x\", "
                      "\"coords\": [1.5]}"),
                  parse_error);
  CHECK_THROWS_AS(parse_normal_vector(
                      "{\"schema_version\": 99, \"triangulation_checksum\": \"x\", "
                      "\"coords\": [1]}"),
                  parse_error);
}
