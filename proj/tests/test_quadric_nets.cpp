#include <gtest/gtest.h>

#include <random>

#include "fano10/errors.hpp"
#include "fano10/quadric_nets.hpp"

using namespace fano10;

namespace {

Poly p6(const char* name) { return Poly::variable(p6_coordinates(), name); }

std::vector<Poly> twisted_cubic(const std::shared_ptr<const Variables>& ring) {
  const Poly t0 = Poly::variable(ring, 0), t1 = Poly::variable(ring, 1);
  std::vector<Poly> v(7, Poly(ring, Rational(0)));
  v[5] = t0 * t0 * t0;
  v[3] = -(t0 * t0 * t1);
  v[4] = t0 * t1 * t1;
  v[6] = -(t1 * t1 * t1);
  return v;
}

QuadricForm diagonal(const std::vector<long>& d) {
  RationalMatrix g(7, RationalVector(7, Rational(0)));
  for (std::size_t i = 0; i < 7; ++i) g[i][i] = d[i];
  return QuadricForm::from_rationals(g);
}

}  // namespace

TEST(QuadricNets, PencilMatchesDisplay) {
  const auto pen = pfaffian_pencil_canonical();
  EXPECT_EQ(pen.P0.polynomial(), p6("x01") * p6("x24") - p6("x02") * p6("x03") + p6("x04") * p6("x12"));
  EXPECT_EQ(pen.Pinf.polynomial(), p6("x01") * p6("x04") - p6("x02") * p6("x13") + p6("x03") * p6("x12"));
  EXPECT_EQ(pen.P0.rank(), 6u);
  EXPECT_EQ(pen.Pinf.rank(), 6u);
}

TEST(QuadricNets, PolynomialGramRoundTrip) {
  const auto q = random_quadric(4);
  EXPECT_EQ(QuadricForm::from_polynomial(q.polynomial()).gram(), q.gram());
  EXPECT_THROW(QuadricForm::from_polynomial(p6("x01")), std::invalid_argument);
}

TEST(QuadricNets, VerticesOfGenerators) {
  const auto pen = pfaffian_pencil_canonical();
  auto kernel = [](const QuadricForm& q) { return kernel_over_fraction_field(q.gram()).at(0).column_entries(0); };
  const auto k0 = kernel(pen.P0);
  const auto kinf = kernel(pen.Pinf);
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(k0[i].is_zero(), i != 5) << p6_coordinates()[i];
    EXPECT_EQ(kinf[i].is_zero(), i != 6) << p6_coordinates()[i];
  }
}

TEST(QuadricNets, RankCertificate) {
  const auto cert = pencil_rank_certificate(pfaffian_pencil_canonical());
  EXPECT_EQ(cert.generic_rank, 6u);
  EXPECT_TRUE(cert.everywhere_rank_ge);
}

TEST(QuadricNets, VertexCurve) {
  const auto pen = pfaffian_pencil_canonical();
  const auto vc = vertex_curve(pen);
  EXPECT_EQ(vc.degree, 3);
  const auto ring = vc.point.front().ring();
  EXPECT_TRUE(projectively_equal(vc.point, twisted_cubic(ring)));
  EXPECT_TRUE((pen.matrix().in_ring(ring) * PolyMatrix::column(vc.point)).is_zero());
  // Endpoints.
  const std::vector<Rational> at0{Rational(1), Rational(0)}, atinf{Rational(0), Rational(1)};
  std::vector<Rational> v0, vinf;
  for (const auto& p : vc.point) {
    v0.push_back(p.evaluate(at0));
    vinf.push_back(p.evaluate(atinf));
  }
  EXPECT_TRUE(projectively_equal(v0, std::vector<Rational>{0, 0, 0, 0, 0, 1, 0}));
  EXPECT_TRUE(projectively_equal(vinf, std::vector<Rational>{0, 0, 0, 0, 0, 0, 1}));
  EXPECT_TRUE(w_membership(WedgePoint::basis(1, 3)));
}

TEST(QuadricNets, VertexCurveRejectsDegeneratePencil) {
  const auto pen = pfaffian_pencil_canonical();
  EXPECT_THROW(vertex_curve(QuadricPencil{pen.P0, pen.P0}), DegeneratePencilError);
}

TEST(QuadricNets, PencilContainsP3) {
  const auto pen = pfaffian_pencil_canonical();
  const auto ring = make_ring({"a", "b", "c", "d"});
  std::vector<Poly> g(7, Poly(ring, Rational(0)));
  for (std::size_t k = 0; k < 4; ++k) g[3 + k] = Poly::variable(ring, k);
  EXPECT_TRUE(compose(pen.P0.polynomial(), g).is_zero());
  EXPECT_TRUE(compose(pen.Pinf.polynomial(), g).is_zero());
}

TEST(QuadricNets, BuildNet) {
  const auto pen = pfaffian_pencil_canonical();
  EXPECT_THROW(build_net(pen.P0), DegenerateNetError);
  EXPECT_NO_THROW(build_net(random_quadric(1)));
}

TEST(QuadricNets, DiagonalNetSplitsIntoLines) {
  const auto net = make_net(diagonal({1, 0, 0, 1, 2, 0, 1}), diagonal({0, 1, 0, 1, 0, 3, 1}), diagonal({0, 0, 1, 0, 1, 1, 1}));
  const auto septic = determinantal_septic(net);
  EXPECT_EQ(septic.degree, 7);
  const auto ring = septic.form.ring();
  const Poly s0 = Poly::variable(ring, 0), s1 = Poly::variable(ring, 1), s2 = Poly::variable(ring, 2);
  const Poly product = s0 * s1 * s2 * (s0 + s1) * (Poly(2) * s0 + s2) * (Poly(3) * s1 + s2) * (s0 + s1 + s2);
  EXPECT_EQ(septic.form, product);
}

TEST(QuadricNets, SepticSplitExamples) {
  const auto ring = make_ring({"s0", "s1", "s2"});
  const Poly s0 = Poly::variable(ring, 0), s1 = Poly::variable(ring, 1), s2 = Poly::variable(ring, 2);
  const Poly other = s0 + s1 + s2;
  const auto split = septic_split(PlaneCurve{s2 * other.pow(6), 7}, s2);
  EXPECT_EQ(split.residual.degree, 6);
  EXPECT_EQ(split.intersection.count, 6);
  EXPECT_FALSE(split.intersection.distinct);
  EXPECT_THROW(septic_split(PlaneCurve{other.pow(7), 7}, s2), SplitError);
  EXPECT_THROW(septic_split(PlaneCurve{s2 * s2 * other.pow(5), 7}, s2), MultiplicityError);
  Poly sextic = s0 - s1;
  for (int k = 2; k <= 6; ++k) sextic *= s0 - Poly(k) * s1 + Poly(k * k) * s2;
  const auto good = septic_split(PlaneCurve{(s0 + s2) * sextic, 7}, s0 + s2);
  EXPECT_EQ(good.intersection.count, 6);
  EXPECT_TRUE(good.intersection.distinct);
}

TEST(QuadricNets, SampledNetsSplit) {
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto s = analyze_sample(seed);
    EXPECT_EQ(s.septic_degree, 7) << s.failure;
    EXPECT_TRUE(s.line_divides_once) << s.failure;
    EXPECT_EQ(s.sextic_degree, 6);
    ok += s.ok() ? 1 : 0;
  }
  EXPECT_GE(ok, 4);
}

TEST(QuadricNets, SepticIsCovariant) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> d(-2, 2);
  const auto net = build_net(random_quadric(9));
  const auto septic = determinantal_septic(net);
  for (int t = 0; t < 2; ++t) {
    RationalMatrix a(3, RationalVector(3, Rational(0)));
    do {
      for (auto& row : a) {
        for (auto& e : row) e = d(rng);
      }
    } while (determinant(a) == 0);
    // New generators Q'_j = sum_i a_ij Q_i, so Q'(s) = Q(a s).
    std::vector<RationalMatrix> gens;
    for (std::size_t j = 0; j < 3; ++j) {
      RationalMatrix g(7, RationalVector(7, Rational(0)));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t r = 0; r < 7; ++r) {
          for (std::size_t c = 0; c < 7; ++c) g[r][c] += a[i][j] * net.generators[i].gram()(r, c).constant_value();
        }
      }
      gens.push_back(g);
    }
    const auto moved = determinantal_septic(make_net(QuadricForm::from_rationals(gens[0]), QuadricForm::from_rationals(gens[1]),
                                                     QuadricForm::from_rationals(gens[2])));
    const auto ring = septic.form.ring();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < 3; ++i) {
      Poly v(ring, Rational(0));
      for (std::size_t j = 0; j < 3; ++j) v += a[i][j] * Poly::variable(ring, j);
      images.push_back(v);
    }
    EXPECT_EQ(moved.form, compose(septic.form, images));
  }
}

TEST(QuadricNets, DeterminantalCodim) {
  EXPECT_EQ(determinantal_codim(6), 1);
  EXPECT_EQ(determinantal_codim(5), 3);
  EXPECT_EQ(determinantal_codim(1), 21);
  EXPECT_THROW(determinantal_codim(0), std::domain_error);
  EXPECT_THROW(determinantal_codim(7), std::domain_error);
}

TEST(QuadricNets, NetJson) {
  const auto net = build_net(random_quadric(3));
  const auto back = net_from_json(net_to_json(net));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(back.generators[k].gram(), net.generators[k].gram());
  EXPECT_THROW(net_from_json(Json{{"quadrics", Json::array()}}), std::invalid_argument);
}

TEST(QuadricNets, PencilScenario) {
  const auto rep = scenario_pfaffian_pencil();
  EXPECT_EQ(rep.status(), ReportStatus::pass) << report_to_text(rep);
}
