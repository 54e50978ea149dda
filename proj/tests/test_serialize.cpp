#include <gtest/gtest.h>

#include <random>

#include "fano10/serialize.hpp"
#include "test_support.hpp"

using namespace fano10;

TEST(Serialize, PolyCanonicalForm) {
  auto ring = make_ring({"x", "y"});
  const Poly f = Poly::variable(ring, 0) * make_rational(-3, 2) + Poly::variable(ring, 1).pow(2);
  const Json j = poly_to_json(f);
  EXPECT_EQ(j.dump(), R"({"variables":["x","y"],"order":"grlex","terms":[[[1,0],"-3/2"],[[0,2],"1"]]})");
  EXPECT_EQ(poly_from_json(j), f);
}

TEST(Serialize, RoundTripRandom) {
  std::mt19937_64 rng(5);
  auto ring = make_ring({"s0", "s1", "s2"});
  for (int i = 0; i < 30; ++i) {
    const Poly f = gen::random_poly(rng, ring, 3, 5);
    const Json j = poly_to_json(f);
    ASSERT_EQ(poly_from_json(Json::parse(j.dump())), f);
    ASSERT_EQ(poly_to_json(poly_from_json(j)), j);
  }
  const PolyMatrix m = gen::random_matrix(rng, ring, 3, 2, 3);
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
}

TEST(Serialize, RejectsMalformed) {
  EXPECT_THROW(poly_from_json(Json::parse(R"({"terms":[]})")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"variables":["x"],"order":"lex","terms":[]})")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"variables":["x"],"terms":[[[1,2],"1"]]})")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"variables":["x"],"terms":[[[1],"1"],[[1],"2"]]})")),
               std::invalid_argument);
  EXPECT_THROW(rational_from_json(Json::parse("1.5")), std::invalid_argument);
  EXPECT_EQ(rational_from_json(Json::parse("-4")), Rational(-4));
  EXPECT_THROW(rational_matrix_from_json(Json::parse("[[1,2],[3]]")), std::invalid_argument);
}
