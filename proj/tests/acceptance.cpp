// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fano10/aut_w.hpp"
#include "fano10/birational.hpp"
#include "fano10/grassmann.hpp"
#include "fano10/quadric_nets.hpp"
#include "fano10/schubert.hpp"
#include "lr_oracle.hpp"
#include "test_support.hpp"

using namespace fano10;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void info(const std::string& text) { detail += (detail.empty() ? "" : "; ") + text; }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

Json computed(const ScenarioReport& r, const std::string& step) {
  const ReportStep* s = r.find(step);
  return s ? s->computed : Json();
}

Poly rho_conic_minus() {
  const auto r = make_ring({"x01", "x02", "x12"});
  const Poly x01 = Poly::variable(r, 0), x02 = Poly::variable(r, 1), x12 = Poly::variable(r, 2);
  return x12 * x12 - Poly(4) * x01 * x02;
}

Outcome schubert_table() {
  Outcome o;
  const auto s1 = SchubertClass::sigma({1});
  const auto s2 = SchubertClass::sigma({2});
  const auto s11 = SchubertClass::sigma({1, 1});
  const auto s1_4 = power(s1, 4);
  o.require(power(s1, 6) == Integer(5) * SchubertClass::sigma({3, 3}), "sigma1^6 = 5 sigma33");
  o.require(degree_pairing(Integer(2) * power(s1, 6)) == 10, "<2 sigma1^6> = 10");
  const Integer p2 = degree_pairing(multiply(s2, s1_4));
  const Integer p11 = degree_pairing(multiply(s11, s1_4));
  o.require(2 * p2 == 6, "<sigma2 sigma1^4> on X = 6");
  o.require(2 * p11 == 4, "<sigma11 sigma1^4> on X = 4");
  o.info("sigma2 sigma1^4 = " + p2.get_str() + " and sigma11 sigma1^4 = " + p11.get_str() +
         " on G(2,5), doubled on X = 2 sigma1^3");
  return o;
}

Outcome rank_certificates() {
  Outcome o;
  const auto h = pencil_rank_certificate(tabulated_pencil());
  o.require(h.generic_rank == 4, "generic rank H(t) = 4");
  o.require(h.everywhere_rank_ge_4 && h.minor_gcd.is_constant(), "4x4 minor gcd constant");
  const auto p = pencil_rank_certificate(pfaffian_pencil_canonical());
  o.require(p.generic_rank == 6 && p.everywhere_rank_ge && p.minor_gcd.is_constant(), "P_t rank 6 everywhere");
  o.info("minor gcds " + h.minor_gcd.to_string() + ", " + p.minor_gcd.to_string());
  return o;
}

Outcome kernels() {
  Outcome o;
  const auto tab = tabulated_pencil();
  const auto ring = tab.ring();
  const Poly t0 = Poly::variable(ring, 0), t1 = Poly::variable(ring, 1), zero(ring, Rational(0));
  o.require(projectively_equal(conic_of_centers(tab), std::vector<Poly>{-t0 * t1, -t1 * t1, t0 * t0, zero, zero}),
            "x(t) = (-t0t1 : -t1^2 : t0^2 : 0 : 0)");
  const VertexCurve vc = vertex_curve(pfaffian_pencil_canonical());
  const auto pr = vc.point.front().ring();
  const Poly u0 = Poly::variable(pr, 0), u1 = Poly::variable(pr, 1);
  // p6 order: x01, x02, x12, x03, x04, x13, x24.
  const std::vector<Poly> expected{Poly(pr, Rational(0)), Poly(pr, Rational(0)), Poly(pr, Rational(0)),
                                   -(u0 * u0 * u1),       u0 * u1 * u1,          u0 * u0 * u0,
                                   -(u1 * u1 * u1)};
  o.require(projectively_equal(vc.point, expected), "v_t = e13 - t e03 + t^2 e04 - t^3 e24");
  o.require(vc.degree == 3, "vertex curve degree 3");
  return o;
}

Outcome dual_conic() {
  Outcome o;
  const auto tw = tangent_wedge(conic_of_centers(tabulated_pencil()));
  o.require(compose(rho_conic_minus(), rho_coordinates(tw)).is_zero(), "x12^2 - 4 x01 x02 vanishes on x ^ x'");
  return o;
}

Outcome group_verification() {
  Outcome o;
  o.require(preserves_P7_symbolic().holds(), "symbolic P^7 preservation on both charts");

  const auto ring = make_ring({"u", "v", "x", "y"});
  const Poly u = Poly::variable(ring, 0), v = Poly::variable(ring, 1), x = Poly::variable(ring, 2),
             y = Poly::variable(ring, 3);
  const PolyMatrix m = assemble_matrix(Poly(1), {{{-u, -v}, {v, x}, {y, u}}}, {{{Poly(1), Poly(0)}, {Poly(0), Poly(1)}}});
  const WedgePoint img = wedge_square_image(m, WedgePoint::basis(3, 4));
  std::vector<Poly> want(kWedgeDim, Poly(ring, Rational(0)));
  want[wedge_index(0, 1)] = v * v - u * x;
  want[wedge_index(0, 2)] = v * y - u * u;
  want[wedge_index(1, 2)] = u * v - x * y;
  want[wedge_index(0, 3)] = v;
  want[wedge_index(1, 4)] = v;
  want[wedge_index(0, 4)] = -u;
  want[wedge_index(2, 3)] = -u;
  want[wedge_index(1, 3)] = -x;
  want[wedge_index(2, 4)] = y;
  want[wedge_index(3, 4)] = Poly(ring, Rational(1));
  bool formula = true;
  for (std::size_t k = 0; k < kWedgeDim; ++k) formula = formula && img[k].in_ring(ring) == want[k];
  o.require(formula, "orbit formula coefficient-wise");

  const auto sring = make_ring({"lambda", "a", "b", "c", "d"});
  auto s = [&](std::size_t i) { return Poly::variable(sring, i); };
  const PolyMatrix st = assemble_matrix(s(0), {{{Poly(0), Poly(0)}, {Poly(0), Poly(0)}, {Poly(0), Poly(0)}}},
                                        {{{s(1), s(2)}, {s(3), s(4)}}});
  const WedgePoint fixed = wedge_square_image(st, WedgePoint::basis(3, 4));
  bool stab = !fixed[kWedgeDim - 1].is_zero();
  for (std::size_t k = 0; k + 1 < kWedgeDim; ++k) stab = stab && fixed[k].is_zero();
  o.require(stab, "(lambda, 0, G) fixes e34");

  std::mt19937_64 rng(5151);
  const std::vector<WedgePoint> bases{WedgePoint::basis(3, 4), WedgePoint::basis(1, 3), WedgePoint::basis(1, 2),
                                      WedgePoint::basis(0, 2)};
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    const WedgePoint p = wedge_square_action(sample_element(rng), bases[static_cast<std::size_t>(t) % bases.size()]);
    const WedgePoint q = wedge_square_action(sample_element(rng), p);
    if (orbit_classify(p) == orbit_classify(q)) ++agree;
  }
  o.require(agree == 200, "orbit_classify invariant on 200 pairs");
  o.info(std::to_string(agree) + "/200 invariant pairs");
  return o;
}

Outcome line_pipeline() {
  Outcome o;
  const auto r = scenario_line_transform();
  o.require(computed(r, "blow-up-table") == Json({10, 0, -1, 1}), "blow-up table (10,0,-1,1)");
  o.require(computed(r, "rebased-table") == Json({6, 3, -2, -10}), "rebased table (6,3,-2,-10)");
  o.require(computed(r, "flopped-table") == Json({6, 3, -2, 1}), "flopped table (6,3,-2,1)");
  o.require(computed(r, "deg-Y") == 10 && computed(r, "deg-center") == 1, "deg Y = 10, deg l-bar = 1");
  o.require(computed(r, "adjunction") == 1 && computed(r, "flopped-table")[3] == 1, "flop and adjunction routes give 1");
  o.require(r.status() == ReportStatus::pass, "report passes");
  return o;
}

Outcome conic_pipeline() {
  Outcome o;
  const auto r = scenario_conic_transform();
  o.require(computed(r, "blow-up-table") == Json({10, 0, -2, 0}), "blow-up table (10,0,-2,0)");
  o.require(computed(r, "rebased-table") == Json({4, 4, -2, -28}), "rebased table (4,4,-2,-28)");
  o.require(computed(r, "flopped-table") == Json({4, 4, -2, 0}), "flopped table (4,4,-2,0)");
  o.require(computed(r, "deg-Y") == 10 && computed(r, "deg-center") == 2, "deg Y = 10, deg q-bar = 2");
  o.require(r.status() != ReportStatus::fail, "no failing step");
  o.info("report status " + to_string(r.status()) + " (per-curve flop route recorded as unverified)");
  return o;
}

Outcome node_pipeline() {
  Outcome o;
  const auto r = scenario_node_projection();
  o.require(computed(r, "anticanonical-degree") == 8, "(-K')^3 = 8");
  o.require(computed(r, "quartic-D") == 0, "D'.C' = 0");
  o.require(computed(r, "quartic-K") == 2, "(-K+).C+ = 2");
  return o;
}

Outcome determinantal_split() {
  Outcome o;
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SampleOutcome s = analyze_sample(seed);
    if (s.valid_net && s.septic_degree == 7 && s.line_divides_once && s.sextic_degree == 6 && s.intersection.count == 6 &&
        s.intersection.distinct) {
      ++ok;
    }
  }
  o.require(ok >= 18, ">= 18 of 20 nets split as line + sextic with 6 distinct points");
  o.info(std::to_string(ok) + "/20 nets");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto spec = g25();
  const auto parts = spec.partitions();
  int pairs = 0, agree = 0;
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      ++pairs;
      if (multiply(SchubertClass::sigma(spec, a), SchubertClass::sigma(spec, b)) == oracle::lr_product(spec, a, b)) ++agree;
    }
  }
  o.require(agree == pairs, "Schubert multiply = LR tableaux on all pairs");
  std::mt19937_64 rng(777);
  const auto ring = make_ring({"p", "q", "r"});
  std::uniform_int_distribution<std::size_t> size(1, 5);
  int dets = 0;
  for (int t = 0; t < 50; ++t) {
    const PolyMatrix m = gen::random_matrix(rng, ring, size(rng), 2, 2);
    if (det_cofactor(m) == det_bareiss(m)) ++dets;
  }
  o.require(dets == 50, "cofactor = Bareiss on 50 matrices");
  o.info(std::to_string(agree) + "/" + std::to_string(pairs) + " LR pairs, " + std::to_string(dets) + "/50 determinants");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Schubert table", 1.0, schubert_table},
      {2, "rank certificates", 5.0, rank_certificates},
      {3, "kernel parametrizations", 0.0, kernels},
      {4, "dual conic", 0.0, dual_conic},
      {5, "group verification", 30.0, group_verification},
      {6, "line-transform pipeline", 0.0, line_pipeline},
      {7, "conic-transform pipeline", 0.0, conic_pipeline},
      {8, "node pipeline", 0.0, node_pipeline},
      {9, "determinantal split", 60.0, determinantal_split},
      {10, "oracle equivalence", 0.0, oracle_equivalence},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.ok = false;
      o.detail += "; exceeded " + std::to_string(c.budget_seconds) + " s budget";
    }
    if (!o.ok) ++failures;
    std::printf("criterion %2d %s  %-26s %8.3f s  %s\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), secs,
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
