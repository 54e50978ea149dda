#include "fano10/aut_w.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fano10/errors.hpp"

namespace fano10 {

namespace {

using PolyMat32 = std::array<std::array<Poly, 2>, 3>;
using PolyMat2 = std::array<std::array<Poly, 2>, 2>;

Rational det2(const Mat2& g) { return g[0][0] * g[1][1] - g[0][1] * g[1][0]; }

Mat2 mul2(const Mat2& x, const Mat2& y) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  }
  return out;
}

Mat2 inv2(const Mat2& g) {
  const Rational d = det2(g);
  if (d == 0) throw std::domain_error("singular 2x2 matrix");
  return Mat2{{{g[1][1] / d, -g[0][1] / d}, {-g[1][0] / d, g[0][0] / d}}};
}

Mat2 columns(const RationalVector& v, const RationalVector& w) { return Mat2{{{v[0], w[0]}, {v[1], w[1]}}}; }

/// (v, w) with det [v w] = 1.
Mat2 complete_to_sl2(const RationalVector& v) {
  if (v[0] != 0) return columns(v, {Rational(0), 1 / v[0]});
  return columns(v, {-1 / v[1], Rational(0)});
}

std::string mat_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.size(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m[r].size(); ++c) os << (c ? ", " : "") << to_string(m[r][c]);
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix constant_matrix(const RationalMatrix& m) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
  return PolyMatrix(std::move(rows));
}

}  // namespace

RationalMatrix symm2(const Mat2& G) {
  const Rational &a = G[0][0], &b = G[0][1], &c = G[1][0], &d = G[1][1];
  return {{a * d + b * c, a * c, b * d}, {2 * a * b, a * a, b * b}, {2 * c * d, c * c, d * d}};
}

PolyMatrix symm2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  return PolyMatrix({{a * d + b * c, a * c, b * d},
                     {Poly(2) * a * b, a * a, b * b},
                     {Poly(2) * c * d, c * c, d * d}});
}

PolyMatrix assemble_matrix(const Poly& lambda, const PolyMat32& U, const PolyMat2& G) {
  const PolyMatrix s = symm2(G[0][0], G[0][1], G[1][0], G[1][1]);
  std::vector<std::vector<Poly>> rows(5, std::vector<Poly>(5, Poly(0)));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) rows[r][c] = lambda * s(r, c);
    for (std::size_t c = 0; c < 2; ++c) rows[r][3 + c] = U[r][c];
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) rows[3 + r][3 + c] = G[r][c];
  }
  return PolyMatrix(std::move(rows));
}

RationalMatrix AutWElement::matrix() const {
  RationalMatrix m(5, RationalVector(5, Rational(0)));
  const RationalMatrix s = symm2(G);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = lambda * s[r][c];
    for (std::size_t c = 0; c < 2; ++c) m[r][3 + c] = U[r][c];
  }
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) m[3 + r][3 + c] = G[r][c];
  }
  return m;
}

PolyMatrix AutWElement::poly_matrix() const { return constant_matrix(matrix()); }

std::string AutWElement::to_string() const {
  RationalMatrix u(3), g(2);
  for (std::size_t r = 0; r < 3; ++r) u[r] = {U[r][0], U[r][1]};
  for (std::size_t r = 0; r < 2; ++r) g[r] = {G[r][0], G[r][1]};
  return "(lambda=" + fano10::to_string(lambda) + ", U=" + mat_string(u) + ", G=" + mat_string(g) + ")";
}

std::array<Rational, 2> u_constraints(const Mat32& U, const Mat2& G) {
  const Rational &a = G[0][0], &b = G[0][1], &c = G[1][0], &d = G[1][1];
  return {b * U[0][0] - a * U[0][1] - d * U[1][0] + c * U[1][1],
          d * U[0][0] - c * U[0][1] - b * U[2][0] + a * U[2][1]};
}

AutWElement assemble(const Rational& lambda, const Mat32& U, const Mat2& G) {
  if (lambda == 0) throw InvalidElementError("lambda must be nonzero");
  if (det2(G) != 1) throw InvalidElementError("det G = " + to_string(det2(G)) + ", expected ad - bc = 1");
  const auto c = u_constraints(U, G);
  if (c[0] != 0) {
    throw InvalidElementError("constraint b*U00 - a*U01 - d*U10 + c*U11 = 0 violated (value " + to_string(c[0]) + ")");
  }
  if (c[1] != 0) {
    throw InvalidElementError("constraint d*U00 - c*U01 - b*U20 + a*U21 = 0 violated (value " + to_string(c[1]) + ")");
  }
  return AutWElement{lambda, U, G};
}

AutWElement identity_element() { return AutWElement{}; }

AutWElement lambda_element(const Rational& lambda) { return assemble(lambda, Mat32{}, identity_element().G); }

AutWElement ga_element(const Rational& u, const Rational& v, const Rational& x, const Rational& y) {
  return assemble(Rational(1), Mat32{{{-u, -v}, {v, x}, {y, u}}}, identity_element().G);
}

AutWElement pgl2_element(const Mat2& G) { return assemble(Rational(1), Mat32{}, G); }

std::optional<AutWElement> decompose(const RationalMatrix& m) {
  if (m.size() != 5) return std::nullopt;
  for (std::size_t r = 3; r < 5; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (m[r][c] != 0) return std::nullopt;
    }
  }
  const Mat2 G{{{m[3][3], m[3][4]}, {m[4][3], m[4][4]}}};
  if (det2(G) != 1) return std::nullopt;
  const RationalMatrix s = symm2(G);
  std::optional<Rational> lambda;
  for (std::size_t r = 0; r < 3 && !lambda; ++r) {
    for (std::size_t c = 0; c < 3 && !lambda; ++c) {
      if (s[r][c] != 0) lambda = m[r][c] / s[r][c];
    }
  }
  if (!lambda || *lambda == 0) return std::nullopt;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (m[r][c] != *lambda * s[r][c]) return std::nullopt;
    }
  }
  const Mat32 U{{{m[0][3], m[0][4]}, {m[1][3], m[1][4]}, {m[2][3], m[2][4]}}};
  const auto c = u_constraints(U, G);
  if (c[0] != 0 || c[1] != 0) return std::nullopt;
  return AutWElement{*lambda, U, G};
}

AutWElement inverse(const AutWElement& g) {
  const auto inv = fano10::inverse(g.matrix());
  if (!inv) throw InvalidElementError("element is not invertible");
  auto d = decompose(*inv);
  if (!d) throw ClosureViolationError("inverse of " + g.to_string() + " left the (lambda, U, G) family");
  return *d;
}

WedgePoint wedge_square_image(const PolyMatrix& a, const WedgePoint& p) {
  if (a.rows() != 5 || a.cols() != 5) throw std::invalid_argument("wedge_square_image needs a 5x5 matrix");
  const auto ring = merge_rings(*a.ring(), p[0].variables());
  const PolyMatrix m = a.in_ring(ring);
  std::vector<Poly> out(kWedgeDim, Poly(ring, Rational(0)));
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    const Poly coeff = p[k].in_ring(ring);
    if (coeff.is_zero()) continue;
    const auto [i, j] = wedge_pair(k);
    for (std::size_t l = 0; l < kWedgeDim; ++l) {
      const auto [r, s] = wedge_pair(l);
      const Poly minor = m(r, i) * m(s, j) - m(s, i) * m(r, j);
      if (!minor.is_zero()) out[l] += coeff * minor;
    }
  }
  return WedgePoint(std::move(out));
}

WedgePoint wedge_square_action(const AutWElement& g, const WedgePoint& p) {
  return wedge_square_image(g.poly_matrix(), p).normalized();
}

RationalMatrix wedge_square_matrix(const RationalMatrix& a) {
  RationalMatrix w(kWedgeDim, RationalVector(kWedgeDim, Rational(0)));
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    const auto [i, j] = wedge_pair(k);
    for (std::size_t l = 0; l < kWedgeDim; ++l) {
      const auto [r, s] = wedge_pair(l);
      w[l][k] = a[r][i] * a[s][j] - a[s][i] * a[r][j];
    }
  }
  return w;
}

bool same_action(const AutWElement& g, const AutWElement& h) {
  const RationalMatrix wg = wedge_square_matrix(g.matrix());
  const RationalMatrix wh = wedge_square_matrix(h.matrix());
  RationalVector fg, fh;
  for (std::size_t r = 0; r < kWedgeDim; ++r) {
    fg.insert(fg.end(), wg[r].begin(), wg[r].end());
    fh.insert(fh.end(), wh[r].begin(), wh[r].end());
  }
  const auto ng = normalize_projective(fg);
  const auto nh = normalize_projective(fh);
  return ng == nh;
}

std::vector<WedgePoint> p7_basis() {
  auto combo = [](std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    RationalVector v(kWedgeDim, Rational(0));
    for (const auto& [i, j] : pairs) v[wedge_index(i, j)] = 1;
    return WedgePoint::from_rationals(v);
  };
  return {combo({{0, 1}}), combo({{0, 2}}),         combo({{1, 2}}), combo({{0, 3}, {1, 4}}),
          combo({{0, 4}, {2, 3}}), combo({{1, 3}}), combo({{2, 4}}), combo({{3, 4}})};
}

std::vector<Poly> p7_defects(const PolyMatrix& a) {
  std::vector<Poly> out;
  const auto hs = w_hyperplanes();
  for (const auto& b : p7_basis()) {
    const WedgePoint img = wedge_square_image(a, b);
    for (const auto& h : hs) out.push_back(evaluate_form(h, img));
  }
  return out;
}

bool preserves_P7(const PolyMatrix& a) {
  for (const auto& d : p7_defects(a)) {
    if (!d.is_zero()) return false;
  }
  return true;
}

bool preserves_P7(const AutWElement& g) { return preserves_P7(g.poly_matrix()); }

bool SymbolicP7Check::holds() const {
  auto zero = [](const std::vector<Poly>& v) {
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
  };
  return chart_a.size() == 16 && chart_b.size() == 16 && zero(chart_a) && zero(chart_b);
}

SymbolicP7Check preserves_P7_symbolic() {
  SymbolicP7Check check;
  check.variables = {"lambda", "a", "b", "c", "d", "U00", "U01", "U10", "U11", "U20", "U21"};
  const auto ring = make_ring(check.variables);
  auto var = [&](const char* name) { return Poly::variable(ring, index_of(*ring, name)); };
  const Poly a = var("a"), b = var("b"), c = var("c"), d = var("d");
  const Poly u00 = var("U00"), u01 = var("U01"), u10 = var("U10"), u11 = var("U11"), u20 = var("U20"),
             u21 = var("U21");
  const PolyMatrix m = assemble_matrix(var("lambda"), PolyMat32{{{u00, u01}, {u10, u11}, {u20, u21}}},
                                       PolyMat2{{{a, b}, {c, d}}});
  const auto defects = p7_defects(m);
  const std::size_t ic = index_of(*ring, "c"), id = index_of(*ring, "d");
  const std::size_t i00 = index_of(*ring, "U00"), i01 = index_of(*ring, "U01"), i20 = index_of(*ring, "U20"),
                    i21 = index_of(*ring, "U21");
  for (const auto& f : defects) {
    // Chart a != 0: U21, then U01 from the constraints, then d = (1 + bc)/a.
    Poly g = substitute_fraction(f, i21, c * u01 + b * u20 - d * u00, a);
    g = substitute_fraction(g, i01, b * u00 - d * u10 + c * u11, a);
    g = substitute_fraction(g, id, Poly(1) + b * c, a);
    check.chart_a.push_back(g);
    // Chart b != 0: U20, then U00, then c = (ad - 1)/b.
    Poly h = substitute_fraction(f, i20, d * u00 - c * u01 + a * u21, b);
    h = substitute_fraction(h, i00, a * u01 + d * u10 - c * u11, b);
    h = substitute_fraction(h, ic, a * d - Poly(1), b);
    check.chart_b.push_back(h);
  }
  return check;
}

std::optional<std::array<Rational, 4>> ga_parameters(const AutWElement& g) {
  const AutWElement id = identity_element();
  if (g.lambda != 1 || g.G != id.G) return std::nullopt;
  const auto& U = g.U;
  if (U[0][0] != -U[2][1] || U[0][1] != -U[1][0]) return std::nullopt;
  return std::array<Rational, 4>{U[2][1], U[1][0], U[1][1], U[2][0]};
}

ClosureResult group_closure_check(const AutWElement& g1, const AutWElement& g2) {
  const RationalMatrix prod = multiply(g1.matrix(), g2.matrix());
  auto d = decompose(prod);
  if (!d) {
    throw ClosureViolationError("product of " + g1.to_string() + " and " + g2.to_string() +
                                " is not of the form (lambda, U, G)");
  }
  ClosureResult result{*d, std::nullopt};
  if (ga_parameters(g1) && ga_parameters(g2)) result.ga_parameters = ga_parameters(*d);
  return result;
}

std::string to_string(OrbitLabel label) {
  switch (label) {
    case OrbitLabel::open_orbit:
      return "open_orbit";
    case OrbitLabel::Yo_minus_rho:
      return "Yo_minus_rho";
    case OrbitLabel::rho_minus_qo:
      return "rho_minus_qo";
    case OrbitLabel::qo:
      return "qo";
  }
  return "unknown";
}

Poly invariant_conic() {
  static const Poly q = implicit_conic(rho_coordinates(tangent_wedge(conic_of_centers(canonical_pencil()))),
                                       Variables{"x01", "x02", "x12"});
  return q;
}

namespace {

RationalVector rho_values(const WedgePoint& p) {
  const auto r = rho_coordinates(p);
  return {r[0].constant_value(), r[1].constant_value(), r[2].constant_value()};
}

}  // namespace

OrbitLabel orbit_classify(const WedgePoint& p) {
  if (!p.is_constant()) throw std::domain_error("orbit_classify needs a rational point");
  if (!w_membership(p)) throw std::domain_error("orbit_classify: point is not on W: " + p.to_string());
  const auto x = p.rationals();
  if (x[wedge_index(3, 4)] != 0) return OrbitLabel::open_orbit;
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    const auto [i, j] = wedge_pair(k);
    if (j > 2 && x[k] != 0) return OrbitLabel::Yo_minus_rho;
  }
  return invariant_conic().evaluate(rho_values(p)) != 0 ? OrbitLabel::rho_minus_qo : OrbitLabel::qo;
}

namespace {

/// Coefficients (alpha, beta, gamma) of the binary quadratic
/// alpha s^2 + beta s r + gamma r^2 vanishing at the (s : r) whose
/// tangent-line points lie on the rho-plane point.
std::array<Rational, 3> rho_binary_form(const WedgePoint& p) {
  const auto x = rho_values(p);
  return {-x[1], x[2], x[0]};
}

std::vector<RationalVector> rational_roots(const std::array<Rational, 3>& f) {
  const auto& [alpha, beta, gamma] = f;
  const Rational disc = beta * beta - 4 * alpha * gamma;
  if (alpha == 0) {
    std::vector<RationalVector> roots{{Rational(1), Rational(0)}};
    if (beta != 0) roots.push_back({-gamma, beta});
    return roots;
  }
  if (!is_rational_square(disc)) return {};
  const Rational sq = rational_sqrt(disc);
  if (sq == 0) return {{-beta, 2 * alpha}};
  return {{-beta + sq, 2 * alpha}, {-beta - sq, 2 * alpha}};
}

std::optional<Mat2> rho_stratum_map(const std::array<Rational, 3>& fp, const std::array<Rational, 3>& fq) {
  const auto rp = rational_roots(fp);
  const auto rq = rational_roots(fq);
  if (rp.size() != rq.size()) return std::nullopt;
  if (rp.size() == 1) {
    const auto src = normalize_projective(rp[0]);
    const auto dst = normalize_projective(rq[0]);
    return mul2(complete_to_sl2(dst), inv2(complete_to_sl2(src)));
  }
  if (rp.size() == 2) {
    const Mat2 src = columns(rp[0], rp[1]);
    const Mat2 dst = columns(rq[0], rq[1]);
    const Rational mu = det2(src) / det2(dst);
    const Mat2 scaled = mul2(dst, Mat2{{{Rational(1), Rational(0)}, {Rational(0), mu}}});
    return mul2(scaled, inv2(src));
  }
  // Both forms irreducible over Q: complete the square, match discriminants,
  // then correct the determinant inside the stabilizer torus.
  const Rational dp = (fp[1] * fp[1] - 4 * fp[0] * fp[2]) / (4 * fp[0] * fp[0]);
  const Rational dq = (fq[1] * fq[1] - 4 * fq[0] * fq[2]) / (4 * fq[0] * fq[0]);
  if (!is_rational_square(dq / dp)) return std::nullopt;
  const Rational k = rational_sqrt(dq / dp);
  const Mat2 hp{{{Rational(1), fp[1] / (2 * fp[0])}, {Rational(0), Rational(1)}}};
  const Mat2 hq{{{Rational(1), fq[1] / (2 * fq[0])}, {Rational(0), Rational(1)}}};
  const Mat2 scale{{{Rational(1), Rational(0)}, {Rational(0), 1 / k}}};
  constexpr int kWindow = 24;
  for (int m = 0; m <= kWindow; ++m) {
    for (int n = -kWindow; n <= kWindow; ++n) {
      if (m == 0 && n == 0) continue;
      const Mat2 torus{{{Rational(m), dp * n}, {Rational(n), Rational(m)}}};
      for (int eps : {1, -1}) {
        const Mat2 flip{{{Rational(1), Rational(0)}, {Rational(0), Rational(eps)}}};
        const Rational det = det2(torus) * eps / k;
        if (!is_rational_square(det)) continue;
        const Rational c = 1 / rational_sqrt(det);
        Mat2 g = mul2(inv2(hq), mul2(scale, mul2(flip, mul2(torus, hp))));
        for (auto& row : g) {
          for (auto& e : row) e *= c;
        }
        return g;
      }
    }
  }
  return std::nullopt;
}

std::array<Rational, 4> open_orbit_parameters(const WedgePoint& p) {
  const auto x = p.rationals();
  const Rational s = x[wedge_index(3, 4)];
  return {-x[wedge_index(0, 4)] / s, x[wedge_index(0, 3)] / s, -x[wedge_index(1, 3)] / s, x[wedge_index(2, 4)] / s};
}

}  // namespace

std::optional<AutWElement> orbit_transitivity_witness(const WedgePoint& p, const WedgePoint& q) {
  const OrbitLabel lp = orbit_classify(p);
  const OrbitLabel lq = orbit_classify(q);
  if (lp != lq) {
    throw std::domain_error("orbit_transitivity_witness: labels differ (" + to_string(lp) + " vs " + to_string(lq) +
                            ")");
  }
  std::optional<AutWElement> g;
  switch (lp) {
    case OrbitLabel::open_orbit: {
      const auto a = open_orbit_parameters(p);
      const auto b = open_orbit_parameters(q);
      g = ga_element(b[0] - a[0], b[1] - a[1], b[2] - a[2], b[3] - a[3]);
      break;
    }
    case OrbitLabel::Yo_minus_rho:
      return std::nullopt;
    case OrbitLabel::rho_minus_qo:
    case OrbitLabel::qo: {
      const auto G = rho_stratum_map(rho_binary_form(p), rho_binary_form(q));
      if (!G) return std::nullopt;
      g = pgl2_element(*G);
      break;
    }
  }
  if (!projectively_equal(wedge_square_action(*g, p), q)) {
    throw VerificationFailure("orbit witness " + g->to_string() + " does not map " + p.to_string() + " to " +
                              q.to_string());
  }
  return g;
}

Json element_to_json(const AutWElement& g) {
  Json out = Json::object();
  out["lambda"] = rational_to_json(g.lambda);
  out["G"] = Json::array();
  for (const auto& row : g.G) {
    for (const auto& e : row) out["G"].push_back(rational_to_json(e));
  }
  out["U"] = Json::array();
  for (const auto& row : g.U) {
    for (const auto& e : row) out["U"].push_back(rational_to_json(e));
  }
  return out;
}

AutWElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("G") || !j.contains("U")) {
    throw std::invalid_argument("element needs keys lambda, G, U");
  }
  const Json& gj = j.at("G");
  const Json& uj = j.at("U");
  if (!gj.is_array() || gj.size() != 4) throw std::invalid_argument("element G must hold 4 rationals");
  if (!uj.is_array() || uj.size() != 6) throw std::invalid_argument("element U must hold 6 rationals");
  Mat2 G{};
  Mat32 U{};
  for (std::size_t k = 0; k < 4; ++k) G[k / 2][k % 2] = rational_from_json(gj[k]);
  for (std::size_t k = 0; k < 6; ++k) U[k / 2][k % 2] = rational_from_json(uj[k]);
  return assemble(rational_from_json(j.at("lambda")), U, G);
}

AutWElement sample_element(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  Rational lambda = 0;
  while (lambda == 0) lambda = dist(rng);
  Mat2 G = identity_element().G;
  for (int step = 0; step < 3; ++step) {
    const Rational k = dist(rng);
    const Mat2 e = (step % 2 == 0) ? Mat2{{{Rational(1), k}, {Rational(0), Rational(1)}}}
                                   : Mat2{{{Rational(1), Rational(0)}, {k, Rational(1)}}};
    G = mul2(G, e);
  }
  if (dist(rng) > 0) G = mul2(G, Mat2{{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}}});
  const Rational &a = G[0][0], &b = G[0][1], &c = G[1][0], &d = G[1][1];
  const RationalMatrix cons{{b, -a, -d, c, Rational(0), Rational(0)}, {d, -c, Rational(0), Rational(0), -b, a}};
  RationalVector u(6, Rational(0));
  for (const auto& v : nullspace(cons, 6)) {
    const Rational w = dist(rng);
    for (std::size_t i = 0; i < 6; ++i) u[i] += w * v[i];
  }
  const Mat32 U{{{u[0], u[1]}, {u[2], u[3]}, {u[4], u[5]}}};
  return assemble(lambda, U, G);
}

}  // namespace fano10
