#include "fano10/quadric_nets.hpp"

#include <random>
#include <stdexcept>

#include "fano10/birational.hpp"
#include "fano10/errors.hpp"
#include "fano10/linear.hpp"

namespace fano10 {

namespace {

constexpr std::size_t kP6 = 7;

std::shared_ptr<const Variables> p6_ring() {
  static const auto ring = make_ring(p6_coordinates());
  return ring;
}

Poly pull_back_to_p6(const Poly& plucker_form) {
  const auto ring = p6_ring();
  auto x = [&](const char* name) { return Poly::variable(ring, index_of(*ring, name)); };
  // Images of x01, x02, x03, x04, x12, x13, x14, x23, x24, x34.
  const std::vector<Poly> images{x("x01"), x("x02"), x("x03"), x("x04"), x("x12"),
                                 x("x13"), x("x03"), x("x04"), x("x24"), Poly(ring, Rational(0))};
  return compose(plucker_form.in_ring(plucker_ring()), images).in_ring(ring);
}

std::string gram_problem(const PolyMatrix& m) {
  if (m.rows() != kP6 || m.cols() != kP6) return "Gram matrix must be 7x7";
  for (std::size_t i = 0; i < kP6; ++i) {
    for (std::size_t j = 0; j < kP6; ++j) {
      if (!m(i, j).is_constant()) return "Gram matrix entries must be constant";
    }
  }
  if (!m.is_symmetric()) return "Gram matrix must be symmetric";
  return {};
}

PolyMatrix combine(const std::vector<const PolyMatrix*>& mats, const Variables& params) {
  const auto ring = make_ring(params);
  PolyMatrix out(kP6, kP6, ring);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    const Poly t = Poly::variable(ring, k);
    out = out + t * mats[k]->in_ring(ring);
  }
  return out;
}

Json int_or_string(const Integer& v) { return v.fits_slong_p() ? Json(v.get_si()) : Json(v.get_str()); }

}  // namespace

const Variables& p6_coordinates() {
  static const Variables names{"x01", "x02", "x12", "x03", "x04", "x13", "x24"};
  return names;
}

const std::array<std::size_t, 7>& p6_wedge_indices() {
  static const std::array<std::size_t, 7> idx{wedge_index(0, 1), wedge_index(0, 2), wedge_index(1, 2),
                                              wedge_index(0, 3), wedge_index(0, 4), wedge_index(1, 3),
                                              wedge_index(2, 4)};
  return idx;
}

QuadricForm::QuadricForm(PolyMatrix gram) : gram_(std::move(gram)) {
  const std::string problem = gram_problem(gram_);
  if (!problem.empty()) throw std::invalid_argument(problem);
}

QuadricForm QuadricForm::from_polynomial(const Poly& form) {
  const Poly f = form.in_ring(p6_ring());
  if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != 2)) {
    throw std::invalid_argument("quadric must be a homogeneous quadratic form");
  }
  RationalMatrix g(kP6, RationalVector(kP6, Rational(0)));
  for (const auto& [e, c] : f.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < kP6; ++i) {
      for (int k = 0; k < e[i]; ++k) vars.push_back(i);
    }
    if (vars[0] == vars[1]) {
      g[vars[0]][vars[0]] += c;
    } else {
      g[vars[0]][vars[1]] += c / 2;
      g[vars[1]][vars[0]] += c / 2;
    }
  }
  return from_rationals(g);
}

QuadricForm QuadricForm::from_rationals(const RationalMatrix& gram) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : gram) rows.emplace_back(r.begin(), r.end());
  return QuadricForm(PolyMatrix(std::move(rows)));
}

Poly QuadricForm::polynomial() const {
  const auto ring = p6_ring();
  const auto xs = ring_variables(ring);
  Poly f(ring, Rational(0));
  for (std::size_t i = 0; i < kP6; ++i) {
    for (std::size_t j = 0; j < kP6; ++j) {
      const Rational c = gram_(i, j).constant_value();
      if (c != 0) f += c * (xs[i] * xs[j]);
    }
  }
  return f;
}

std::size_t QuadricForm::rank() const { return rank_over_fraction_field(gram_); }

RationalVector QuadricForm::coefficients() const {
  RationalVector out;
  for (std::size_t i = 0; i < kP6; ++i) {
    for (std::size_t j = i; j < kP6; ++j) out.push_back(gram_(i, j).constant_value());
  }
  return out;
}

PolyMatrix QuadricPencil::matrix() const { return combine({&P0.gram(), &Pinf.gram()}, params); }

QuadricPencil pfaffian_pencil_canonical() {
  return QuadricPencil{QuadricForm::from_polynomial(pull_back_to_p6(plucker_quadric(3))),
                       QuadricForm::from_polynomial(pull_back_to_p6(plucker_quadric(4)))};
}

MatrixRankCertificate pencil_rank_certificate(const QuadricPencil& pen) {
  const PolyMatrix m = pen.matrix();
  MatrixRankCertificate cert;
  cert.generic_rank = rank_over_fraction_field(m);
  if (cert.generic_rank >= 6) {
    cert.minor_gcd = minor_gcd(m, 6);
    cert.everywhere_rank_ge = cert.minor_gcd.is_constant() && !cert.minor_gcd.is_zero();
  } else {
    cert.minor_gcd = Poly(m.ring(), Rational(0));
  }
  return cert;
}

WedgePoint VertexCurve::wedge() const {
  const auto ring = point.front().ring();
  std::vector<Poly> coords(kWedgeDim, Poly(ring, Rational(0)));
  for (std::size_t i = 0; i < kP6; ++i) coords[p6_wedge_indices()[i]] = point[i];
  // A point of P^6 sits in P^7 with x14 = x03 and x23 = x04.
  coords[wedge_index(1, 4)] = point[3];
  coords[wedge_index(2, 3)] = point[4];
  return WedgePoint(std::move(coords));
}

VertexCurve vertex_curve(const QuadricPencil& pen) {
  const auto cert = pencil_rank_certificate(pen);
  if (cert.generic_rank != 6 || !cert.everywhere_rank_ge) {
    throw DegeneratePencilError("vertex_curve: pencil is not of constant rank 6 (generic rank " +
                                std::to_string(cert.generic_rank) + ")");
  }
  const auto ker = kernel_over_fraction_field(pen.matrix());
  VertexCurve v;
  v.point = ker.at(0).column_entries(0);
  for (const auto& p : v.point) {
    if (!p.is_zero()) v.degree = std::max(v.degree, p.total_degree());
  }
  return v;
}

PolyMatrix QuadricNet::matrix() const {
  return combine({&generators[0].gram(), &generators[1].gram(), &generators[2].gram()}, params);
}

QuadricNet make_net(const QuadricForm& q0, const QuadricForm& q1, const QuadricForm& q2) {
  const RationalMatrix coeffs{q0.coefficients(), q1.coefficients(), q2.coefficients()};
  const std::size_t r = fano10::rank(coeffs);
  if (r != 3) throw DegenerateNetError("net generators span only " + std::to_string(r) + " dimensions");
  return QuadricNet{{q0, q1, q2}};
}

QuadricNet build_net(const QuadricForm& q_extra) {
  const auto pen = pfaffian_pencil_canonical();
  return make_net(pen.P0, pen.Pinf, q_extra);
}

PlaneCurve determinantal_septic(const QuadricNet& net) {
  const Poly d = det_bareiss(net.matrix());
  if (d.is_zero()) throw DegenerateNetError("determinant of the net vanishes identically");
  return PlaneCurve{d, d.total_degree()};
}

SepticSplit septic_split(const PlaneCurve& curve, const Poly& line0) {
  const auto ring = merge_rings(curve.form.variables(), line0.variables());
  const Poly f = curve.form.in_ring(ring);
  const Poly line = line0.in_ring(ring);
  if (ring->size() != 3) throw std::invalid_argument("septic_split works in three homogeneous variables");
  if (line.is_zero() || !line.is_homogeneous() || line.total_degree() != 1) {
    throw std::invalid_argument("septic_split needs a nonzero linear form");
  }
  const auto q = try_divide_exact(f, line);
  if (!q) throw SplitError("line " + line.to_string() + " does not divide the curve");
  if (try_divide_exact(*q, line)) throw MultiplicityError("line " + line.to_string() + " divides the curve more than once");
  // Restrict the residual to the line by eliminating its last variable.
  std::size_t var = ring->size();
  for (std::size_t i = ring->size(); i-- > 0;) {
    if (line.involves(i)) {
      var = i;
      break;
    }
  }
  Exponents e(ring->size(), 0);
  e[var] = 1;
  const Rational lead = line.coefficient(e);
  const Poly value = -(line - Poly::monomial(ring, e, lead)) / lead;
  Variables rest;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i != var) rest.push_back((*ring)[i]);
  }
  const Poly restricted = q->substitute(var, value).in_ring(rest);
  SepticSplit out{PlaneCurve{*q, q->total_degree()}, {}};
  const auto roots = binary_form_roots_squarefree(restricted);
  out.intersection = LineIntersection{roots.degree, roots.squarefree};
  return out;
}

int determinantal_codim(int k) {
  if (k < 1 || k > 6) throw std::domain_error("determinantal_codim: k must lie in [1, 6]");
  return (7 - k) * (8 - k) / 2;
}

QuadricForm random_quadric(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(-9, 9);
  RationalMatrix g(kP6, RationalVector(kP6, Rational(0)));
  for (std::size_t i = 0; i < kP6; ++i) {
    for (std::size_t j = i; j < kP6; ++j) g[i][j] = g[j][i] = digit(rng);
  }
  return QuadricForm::from_rationals(g);
}

QuadricNet net_from_json(const Json& j) {
  auto quadric = [](const Json& m) {
    const RationalMatrix g = rational_matrix_from_json(m);
    if (g.size() != kP6) throw std::invalid_argument("net quadrics must be 7x7");
    for (const auto& row : g) {
      if (row.size() != kP6) throw std::invalid_argument("net quadrics must be 7x7");
    }
    return QuadricForm::from_rationals(g);
  };
  if (j.contains("q_extra")) return build_net(quadric(j.at("q_extra")));
  if (!j.contains("quadrics") || !j.at("quadrics").is_array() || j.at("quadrics").size() != 3) {
    throw std::invalid_argument("net descriptor needs 'q_extra' or three 'quadrics'");
  }
  const Json& qs = j.at("quadrics");
  return make_net(quadric(qs[0]), quadric(qs[1]), quadric(qs[2]));
}

Json net_to_json(const QuadricNet& net) {
  Json qs = Json::array();
  for (const auto& q : net.generators) {
    Json m = Json::array();
    for (std::size_t i = 0; i < kP6; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < kP6; ++k) row.push_back(rational_to_json(q.gram()(i, k).constant_value()));
      m.push_back(std::move(row));
    }
    qs.push_back(std::move(m));
  }
  return Json{{"quadrics", qs}};
}

bool SampleOutcome::ok() const {
  return valid_net && septic_degree == 7 && line_divides_once && sextic_degree == 6 && intersection.count == 6 &&
         intersection.distinct;
}

SampleOutcome analyze_sample(std::uint64_t seed) {
  SampleOutcome out;
  out.seed = seed;
  try {
    const QuadricNet net = build_net(random_quadric(seed));
    out.valid_net = true;
    const PlaneCurve septic = determinantal_septic(net);
    out.septic_degree = septic.degree;
    out.septic_coefficients = poly_to_json(septic.form);
    const Poly s2 = Poly::variable(septic.form.ring(), 2);
    const SepticSplit split = septic_split(septic, s2);
    out.line_divides_once = true;
    out.sextic_degree = split.residual.degree;
    out.intersection = split.intersection;
  } catch (const Fano10Error& e) {
    out.failure = e.what();
  } catch (const std::domain_error& e) {
    out.failure = e.what();
  }
  return out;
}

namespace {

void add_pencil_steps(ScenarioReport& rep) {
  const QuadricPencil pen = pfaffian_pencil_canonical();
  const auto ring = p6_ring();
  auto x = [&](const char* name) { return Poly::variable(ring, index_of(*ring, name)); };
  const auto tring = make_ring({"t"});
  const Poly t = Poly::variable(tring, 0);

  rep.check("P0", "P_o = x01 x24 - x02 x03 + x04 x12", (x("x01") * x("x24") - x("x02") * x("x03") + x("x04") * x("x12")).to_string(),
            pen.P0.polynomial().to_string());
  rep.check("rank-P0", "rank(P_o) = 6", 6, static_cast<int>(pen.P0.rank()));
  rep.check("rank-Pinf", "rank(P_inf) = 6", 6, static_cast<int>(pen.Pinf.rank()));

  const auto mring = merge_rings(*ring, *tring);
  auto xm = [&](const char* name) { return Poly::variable(mring, index_of(*mring, name)); };
  const Poly tm = t.in_ring(mring);
  const Poly expanded = xm("x01") * (xm("x24") + tm * xm("x04")) - xm("x02") * (xm("x03") + tm * xm("x13")) +
                         xm("x12") * (xm("x04") + tm * xm("x03"));
  const Poly pt = pen.P0.polynomial().in_ring(mring) + tm * pen.Pinf.polynomial().in_ring(mring);
  rep.check("P_t-expansion", "P_t = x01(x24 + t x04) - x02(x03 + t x13) + x12(x04 + t x03)", true, pt == expanded);

  auto vertex = [&](const QuadricForm& q) {
    const auto ker = kernel_over_fraction_field(q.gram());
    std::string s;
    const auto v = normalize_projective(ker.at(0).column_entries(0));
    for (std::size_t i = 0; i < kP6; ++i) {
      if (!v[i].is_zero()) s += (s.empty() ? "" : " + ") + std::string("e") + p6_coordinates()[i].substr(1);
    }
    return s;
  };
  rep.check("vertex-P0", "v(P_o) = sing(P_o)", "e13", vertex(pen.P0),
            "P_o does not involve x13, so its vertex is e13 and e03 is not in its kernel");
  rep.check("vertex-Pinf", "v(P_inf) = sing(P_inf)", "e24", vertex(pen.Pinf));

  const auto cert = pencil_rank_certificate(pen);
  rep.check("rank-certificate", "rank P_t = 6 for all t", Json{{"generic_rank", 6}, {"everywhere", true}},
            Json{{"generic_rank", cert.generic_rank}, {"everywhere", cert.everywhere_rank_ge}});

  const VertexCurve vc = vertex_curve(pen);
  rep.check("vertex-degree", "C_v is a rational twisted cubic", 3, vc.degree);
  const auto pring = vc.point.front().ring();
  const Poly t0 = Poly::variable(pring, 0), t1 = Poly::variable(pring, 1);
  std::vector<Poly> expected(kP6, Poly(pring, Rational(0)));
  expected[5] = t0 * t0 * t0;
  expected[3] = -(t0 * t0 * t1);
  expected[4] = t0 * t1 * t1;
  expected[6] = -(t1 * t1 * t1);
  rep.check("vertex-curve", "v_t = e13 - t e03 + t^2 e04 - t^3 e24", true, projectively_equal(vc.point, expected));
  rep.tables["vertex_curve"] = vc.wedge().to_string();
  const PolyMatrix kill = pen.matrix().in_ring(pring) * PolyMatrix::column(vc.point);
  rep.check("vertex-kernel", "P_t . v_t = 0", true, kill.is_zero());

  RationalMatrix span;
  for (const auto& p : vc.point) {
    RationalVector row;
    for (int k = 0; k <= 3; ++k) row.push_back(p.coefficient(Exponents{3 - k, k}));
    span.push_back(row);
  }
  std::vector<std::string> support;
  for (std::size_t i = 0; i < kP6; ++i) {
    if (!vc.point[i].is_zero()) support.push_back("e" + p6_coordinates()[i].substr(1));
  }
  rep.check("vertex-span", "P^3_o = Span(e03, e04, e13, e24)",
            Json{{"rank", 4}, {"support", Json::array({"e03", "e04", "e13", "e24"})}},
            Json{{"rank", fano10::rank(span)}, {"support", support}});

  // P_o and P_inf vanish on P^3_o.
  const auto cring = make_ring({"c0", "c1", "c2", "c3"});
  std::vector<Poly> gen(kP6, Poly(cring, Rational(0)));
  gen[3] = Poly::variable(cring, 0);
  gen[4] = Poly::variable(cring, 1);
  gen[5] = Poly::variable(cring, 2);
  gen[6] = Poly::variable(cring, 3);
  const bool vanish = compose(pen.P0.polynomial(), gen).is_zero() && compose(pen.Pinf.polynomial(), gen).is_zero();
  rep.check("pencil-contains-P3", "P_o, P_inf contain P^3_o", true, vanish);

  rep.check("codim-D6", "codim(D_6 in D_7) = 1", 1, determinantal_codim(6));
  rep.check("codim-D5", "codim(D_5 in D_6) = 3 - 1 = 2", 2, determinantal_codim(5) - determinantal_codim(6));
}

void add_sample_steps(ScenarioReport& rep, std::uint64_t seed, int samples) {
  int ok = 0, invalid = 0;
  int deg7 = 0, once = 0, deg6 = 0, six_distinct = 0;
  Json per_sample = Json::array();
  for (int i = 0; i < samples; ++i) {
    const SampleOutcome s = analyze_sample(seed + static_cast<std::uint64_t>(i));
    if (!s.valid_net) ++invalid;
    if (s.septic_degree == 7) ++deg7;
    if (s.line_divides_once) ++once;
    if (s.sextic_degree == 6) ++deg6;
    if (s.intersection.count == 6 && s.intersection.distinct) ++six_distinct;
    if (s.ok()) ++ok;
    Json j = {{"seed", s.seed},
              {"septic_degree", s.septic_degree},
              {"line_divides_once", s.line_divides_once},
              {"sextic_degree", s.sextic_degree},
              {"intersection_count", s.intersection.count},
              {"distinct", s.intersection.distinct},
              {"ok", s.ok()}};
    if (!s.failure.empty()) j["failure"] = s.failure;
    per_sample.push_back(std::move(j));
  }
  rep.tables["samples"] = per_sample;
  const int needed = (9 * samples + 9) / 10;
  rep.check("sampled-nets", "Delta_7(Z) = Pfaffian line + sextic meeting it in 6 points, on >= 90% of samples",
            true, ok >= needed, std::to_string(ok) + "/" + std::to_string(samples) + " samples fully generic");
  rep.tables["sample_counts"] = Json{{"samples", samples},           {"degenerate_nets", invalid},
                                     {"septic_degree_7", deg7},      {"line_divides_once", once},
                                     {"sextic_degree_6", deg6},      {"six_distinct_points", six_distinct},
                                     {"fully_generic", ok}};
  if (samples > 0 && ok == 0) rep.notes.push_back("no sample produced the expected split");
}

}  // namespace

ScenarioReport scenario_pfaffian_pencil() {
  ScenarioReport rep;
  rep.scenario = "pfaffian-pencil";
  add_pencil_steps(rep);
  return rep;
}

ScenarioReport scenario_determinantal_split(std::uint64_t seed, int samples) {
  ScenarioReport rep;
  rep.scenario = "determinantal-split";
  rep.seed = seed;
  add_sample_steps(rep, seed, samples);
  return rep;
}

ScenarioReport node_projection_scenario(std::uint64_t seed, int samples) {
  ScenarioReport rep;
  rep.scenario = "node-projection";
  rep.seed = seed;
  for (auto& s : scenario_node_projection().steps) rep.steps.push_back(std::move(s));
  const PicardState node = blow_up_node(initial_state_X10());
  rep.check("complete-intersection-degree", "deg X'' = 2.2.2 = (-K_X')^3 = 8", 2 * 2 * 2,
            int_or_string(node.cube(node.anticanonical())));
  add_pencil_steps(rep);
  add_sample_steps(rep, seed, samples);
  return rep;
}

}  // namespace fano10
