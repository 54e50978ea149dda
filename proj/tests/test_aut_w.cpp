#include <gtest/gtest.h>

#include <random>

#include "fano10/aut_w.hpp"
#include "fano10/errors.hpp"

using namespace fano10;

namespace {

Mat2 rot() { return Mat2{{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}}}; }

WedgePoint e(std::size_t i, std::size_t j) { return WedgePoint::basis(i, j); }

WedgePoint combo(const std::vector<std::pair<Rational, std::pair<int, int>>>& terms) {
  RationalVector v(kWedgeDim, Rational(0));
  for (const auto& [c, ij] : terms) v[wedge_index(ij.first, ij.second)] += c;
  return WedgePoint::from_rationals(v);
}

// Oracle: naive product of 5x5 matrices entry by entry.
RationalMatrix naive_product(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(5, RationalVector(5, Rational(0)));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

}  // namespace

TEST(AutW, IdentityAssemblesToIdentity) {
  const auto g = assemble(Rational(1), Mat32{}, identity_element().G);
  EXPECT_EQ(g.matrix(), identity_matrix(5));
  EXPECT_TRUE(preserves_P7(g));
}

TEST(AutW, Symm2OfRotation) {
  const RationalMatrix expected{{Rational(-1), Rational(0), Rational(0)},
                                {Rational(0), Rational(0), Rational(1)},
                                {Rational(0), Rational(1), Rational(0)}};
  EXPECT_EQ(symm2(rot()), expected);
  const auto m = pgl2_element(rot()).matrix();
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(m[r][c], expected[r][c]);
  }
}

TEST(AutW, GaShapeSatisfiesConstraints) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int t = 0; t < 50; ++t) {
    const auto g = ga_element(d(rng), d(rng), d(rng), d(rng));
    const auto c = u_constraints(g.U, g.G);
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[1], 0);
  }
}

TEST(AutW, AssembleRejectsBadInput) {
  const Mat2 id = identity_element().G;
  EXPECT_THROW(assemble(Rational(0), Mat32{}, id), InvalidElementError);
  EXPECT_THROW(assemble(Rational(1), Mat32{}, Mat2{{{Rational(2), Rational(0)}, {Rational(0), Rational(1)}}}),
               InvalidElementError);
  Mat32 bad{};
  bad[0][0] = 1;
  try {
    assemble(Rational(1), bad, id);
    FAIL();
  } catch (const InvalidElementError& err) {
    EXPECT_NE(std::string(err.what()).find("d*U00 - c*U01 - b*U20 + a*U21"), std::string::npos);
  }
}

TEST(AutW, ConstraintViolatingMatrixFailsP7) {
  std::array<std::array<Poly, 2>, 3> U{{{Poly(1), Poly(0)}, {Poly(0), Poly(0)}, {Poly(0), Poly(0)}}};
  std::array<std::array<Poly, 2>, 2> G{{{Poly(1), Poly(0)}, {Poly(0), Poly(1)}}};
  EXPECT_FALSE(preserves_P7(assemble_matrix(Poly(1), U, G)));
}

TEST(AutW, SymbolicP7BothCharts) {
  const auto check = preserves_P7_symbolic();
  EXPECT_EQ(check.chart_a.size(), 16u);
  EXPECT_EQ(check.chart_b.size(), 16u);
  EXPECT_TRUE(check.holds());
}

TEST(AutW, SymbolicP7FailsWithoutConstraints) {
  // Sanity of the symbolic check itself: without reducing by the constraints
  // some defect is nonzero.
  const auto ring = make_ring({"lambda", "a", "b", "c", "d", "U00", "U01", "U10", "U11", "U20", "U21"});
  auto v = [&](std::size_t i) { return Poly::variable(ring, i); };
  const PolyMatrix m = assemble_matrix(v(0), {{{v(5), v(6)}, {v(7), v(8)}, {v(9), v(10)}}}, {{{v(1), v(2)}, {v(3), v(4)}}});
  EXPECT_FALSE(preserves_P7(m));
}

TEST(AutW, RandomSamplesPreserveP7) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) EXPECT_TRUE(preserves_P7(sample_element(rng)));
}

TEST(AutW, OrbitFormulaSymbolic) {
  const auto ring = make_ring({"u", "v", "x", "y"});
  const Poly u = Poly::variable(ring, 0), v = Poly::variable(ring, 1), x = Poly::variable(ring, 2),
             y = Poly::variable(ring, 3);
  const PolyMatrix m = assemble_matrix(Poly(1), {{{-u, -v}, {v, x}, {y, u}}}, {{{Poly(1), Poly(0)}, {Poly(0), Poly(1)}}});
  const WedgePoint img = wedge_square_image(m, e(3, 4));
  std::vector<Poly> expected(kWedgeDim, Poly(ring, Rational(0)));
  expected[wedge_index(0, 1)] = v * v - u * x;
  expected[wedge_index(0, 2)] = v * y - u * u;
  expected[wedge_index(1, 2)] = u * v - x * y;
  expected[wedge_index(0, 3)] = v;
  expected[wedge_index(1, 4)] = v;
  expected[wedge_index(0, 4)] = -u;
  expected[wedge_index(2, 3)] = -u;
  expected[wedge_index(1, 3)] = -x;
  expected[wedge_index(2, 4)] = y;
  expected[wedge_index(3, 4)] = Poly(ring, Rational(1));
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    EXPECT_EQ(img[k].in_ring(ring), expected[k]) << wedge_label(k);
  }
}

TEST(AutW, StabilizerSymbolic) {
  const auto ring = make_ring({"lambda", "a", "b", "c", "d"});
  auto v = [&](std::size_t i) { return Poly::variable(ring, i); };
  const PolyMatrix m = assemble_matrix(v(0), {{{Poly(0), Poly(0)}, {Poly(0), Poly(0)}, {Poly(0), Poly(0)}}},
                                       {{{v(1), v(2)}, {v(3), v(4)}}});
  const WedgePoint img = wedge_square_image(m, e(3, 4));
  const Poly det = v(1) * v(4) - v(2) * v(3);
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    EXPECT_EQ(img[k].in_ring(ring), k == wedge_index(3, 4) ? det : Poly(ring, Rational(0)));
  }
}

TEST(AutW, IdentityActsTrivially) {
  const auto p = combo({{Rational(3), {0, 1}}, {Rational(-2), {2, 4}}, {Rational(1), {3, 4}}});
  EXPECT_TRUE(projectively_equal(wedge_square_action(identity_element(), p), p));
}

TEST(AutW, LambdaProduct) {
  const auto r = group_closure_check(lambda_element(Rational(2)), lambda_element(Rational(-3, 5)));
  EXPECT_EQ(r.product.lambda, Rational(-6, 5));
  EXPECT_EQ(r.product.G, identity_element().G);
}

TEST(AutW, GaCompositionIsSum) {
  const auto r = group_closure_check(ga_element(1, 2, 3, 4), ga_element(-5, 7, 0, 2));
  ASSERT_TRUE(r.ga_parameters.has_value());
  EXPECT_EQ((*r.ga_parameters)[0], -4);
  EXPECT_EQ((*r.ga_parameters)[1], 9);
  EXPECT_EQ((*r.ga_parameters)[2], 3);
  EXPECT_EQ((*r.ga_parameters)[3], 6);
}

TEST(AutW, LambdaConjugationScalesGa) {
  const Rational l(3, 2);
  const auto lhs = group_closure_check(group_closure_check(lambda_element(l), ga_element(1, -2, 5, 3)).product,
                                       inverse(lambda_element(l)))
                       .product;
  const auto params = ga_parameters(lhs);
  ASSERT_TRUE(params.has_value());
  EXPECT_EQ((*params)[0], l * 1);
  EXPECT_EQ((*params)[1], l * -2);
  EXPECT_EQ((*params)[2], l * 5);
  EXPECT_EQ((*params)[3], l * 3);
  // Left multiplication alone does not scale the parameters.
  const auto left = group_closure_check(lambda_element(l), ga_element(1, -2, 5, 3)).product;
  EXPECT_FALSE(ga_parameters(left).has_value());
  EXPECT_EQ(left.lambda, l);
}

TEST(AutW, ClosureOn500RandomPairs) {
  std::mt19937_64 rng(20240602);
  for (int t = 0; t < 500; ++t) {
    const auto g1 = sample_element(rng);
    const auto g2 = sample_element(rng);
    const auto r = group_closure_check(g1, g2);
    EXPECT_EQ(r.product.matrix(), naive_product(g1.matrix(), g2.matrix()));
    const auto back = decompose(r.product.matrix());
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->matrix(), r.product.matrix());
    EXPECT_TRUE(preserves_P7(r.product));
  }
}

TEST(AutW, InverseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto g = sample_element(rng);
    EXPECT_EQ(group_closure_check(g, inverse(g)).product.matrix(), identity_matrix(5));
  }
}

TEST(AutW, SameActionModuloSign) {
  Mat2 neg = identity_element().G;
  neg[0][0] = neg[1][1] = -1;
  EXPECT_TRUE(same_action(identity_element(), assemble(Rational(-1), Mat32{}, neg)));
  EXPECT_FALSE(same_action(identity_element(), ga_element(1, 0, 0, 0)));
}

TEST(AutW, ClassifyExamples) {
  EXPECT_EQ(orbit_classify(e(3, 4)), OrbitLabel::open_orbit);
  EXPECT_EQ(orbit_classify(e(1, 2)), OrbitLabel::rho_minus_qo);
  EXPECT_EQ(orbit_classify(e(0, 2)), OrbitLabel::qo);
  EXPECT_EQ(orbit_classify(e(0, 1)), OrbitLabel::qo);
  EXPECT_EQ(orbit_classify(e(1, 3)), OrbitLabel::Yo_minus_rho);
  EXPECT_THROW(orbit_classify(e(0, 3)), std::domain_error);
}

TEST(AutW, InvariantConicIsPlusFour) {
  const auto r = make_ring({"x01", "x02", "x12"});
  const Poly x01 = Poly::variable(r, 0), x02 = Poly::variable(r, 1), x12 = Poly::variable(r, 2);
  EXPECT_EQ(invariant_conic(), x12 * x12 + Poly(4) * x01 * x02);
}

TEST(AutW, ClassifyInvariantOn200Pairs) {
  std::mt19937_64 rng(31337);
  const std::vector<WedgePoint> seeds{e(3, 4), e(1, 3), e(1, 2), e(0, 2)};
  std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
  const int per_label = 200;
  for (int t = 0; t < per_label; ++t) {
    const WedgePoint base = seeds[pick(rng)];
    const WedgePoint p = wedge_square_action(sample_element(rng), base);
    ASSERT_TRUE(w_membership(p));
    const auto g = sample_element(rng);
    const WedgePoint q = wedge_square_action(g, p);
    ASSERT_TRUE(w_membership(q));
    EXPECT_EQ(orbit_classify(p), orbit_classify(base));
    EXPECT_EQ(orbit_classify(q), orbit_classify(p));
  }
}

TEST(AutW, WitnessExamples) {
  const auto id = orbit_transitivity_witness(e(3, 4), e(3, 4));
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(same_action(*id, identity_element()));

  const Rational v(5, 3);
  const auto target = combo({{Rational(1), {3, 4}}, {v, {0, 3}}, {v, {1, 4}}, {v * v, {0, 1}}});
  const auto g = orbit_transitivity_witness(e(3, 4), target);
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(same_action(*g, ga_element(0, v, 0, 0)));

  const auto r = orbit_transitivity_witness(e(0, 2), e(0, 1));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(same_action(*r, pgl2_element(rot())));

  EXPECT_FALSE(orbit_transitivity_witness(e(1, 3), e(2, 4)).has_value());
  EXPECT_THROW(orbit_transitivity_witness(e(3, 4), e(1, 2)), std::domain_error);
}

TEST(AutW, WitnessesOnRandomOrbitPoints) {
  std::mt19937_64 rng(424242);
  for (const auto& base : {e(3, 4), e(1, 2), e(0, 2)}) {
    for (int t = 0; t < 30; ++t) {
      const WedgePoint p = wedge_square_action(sample_element(rng), base);
      const WedgePoint q = wedge_square_action(sample_element(rng), base);
      const auto g = orbit_transitivity_witness(p, q);
      ASSERT_TRUE(g.has_value()) << p.to_string() << " -> " << q.to_string();
      EXPECT_TRUE(projectively_equal(wedge_square_action(*g, p), q));
    }
  }
}

TEST(AutW, NonSplitRhoWitness) {
  // x12^2 + 4 x01 x02 = 5 is not a square, so the two tangent points are conjugate.
  const auto p = combo({{Rational(1), {0, 1}}, {Rational(1), {0, 2}}, {Rational(1), {1, 2}}});
  ASSERT_EQ(orbit_classify(p), OrbitLabel::rho_minus_qo);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    const WedgePoint q = wedge_square_action(sample_element(rng), p);
    const auto g = orbit_transitivity_witness(p, q);
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE(projectively_equal(wedge_square_action(*g, p), q));
  }
}

TEST(AutW, ElementJsonRoundTrip) {
  std::mt19937_64 rng(12);
  const auto g = sample_element(rng);
  const auto back = element_from_json(element_to_json(g));
  EXPECT_EQ(back.matrix(), g.matrix());
  Json bad = element_to_json(identity_element());
  bad["U"][0] = "1";
  EXPECT_THROW(element_from_json(bad), InvalidElementError);
}
