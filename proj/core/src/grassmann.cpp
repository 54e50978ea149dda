#include "fano10/grassmann.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fano10/errors.hpp"

namespace fano10 {

namespace {

constexpr std::array<std::pair<std::size_t, std::size_t>, kWedgeDim> kPairs{{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

Poly zero_in(const std::shared_ptr<const Variables>& ring) { return Poly(ring, Rational(0)); }

std::shared_ptr<const Variables> common_ring(const std::vector<Poly>& polys) {
  std::shared_ptr<const Variables> ring = make_ring({});
  for (const auto& p : polys) {
    if (p.num_variables() > 0) {
      ring = ring->empty() ? p.ring() : merge_rings(*ring, p.variables());
    }
  }
  return ring;
}

std::vector<Poly> in_common_ring(std::vector<Poly> polys) {
  const auto ring = common_ring(polys);
  for (auto& p : polys) p = p.in_ring(ring);
  return polys;
}

}  // namespace

std::size_t wedge_index(std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    if (kPairs[k].first == i && kPairs[k].second == j) return k;
  }
  throw std::invalid_argument("wedge_index needs 0 <= i < j <= 4");
}

std::pair<std::size_t, std::size_t> wedge_pair(std::size_t index) { return kPairs.at(index); }

std::string wedge_label(std::size_t index) {
  const auto [i, j] = wedge_pair(index);
  return "e" + std::to_string(i) + std::to_string(j);
}

std::shared_ptr<const Variables> plucker_ring() {
  static const auto ring = [] {
    Variables names;
    for (const auto& [i, j] : kPairs) names.push_back("x" + std::to_string(i) + std::to_string(j));
    return make_ring(std::move(names));
  }();
  return ring;
}

WedgePoint::WedgePoint(std::vector<Poly> coords) : coords_(in_common_ring(std::move(coords))) {
  if (coords_.size() != kWedgeDim) throw std::invalid_argument("WedgePoint needs 10 coordinates");
  if (std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_zero(); })) {
    throw std::invalid_argument("WedgePoint: all coordinates are zero");
  }
}

WedgePoint WedgePoint::from_rationals(const RationalVector& coords) {
  std::vector<Poly> polys(coords.begin(), coords.end());
  return WedgePoint(std::move(polys));
}

WedgePoint WedgePoint::basis(std::size_t i, std::size_t j) {
  RationalVector v(kWedgeDim, Rational(0));
  v[wedge_index(i, j)] = 1;
  return from_rationals(v);
}

WedgePoint WedgePoint::from_skew(const PolyMatrix& m) {
  if (m.rows() != 5 || !m.is_skew_symmetric()) throw std::invalid_argument("from_skew needs a 5x5 skew matrix");
  std::vector<Poly> c;
  for (const auto& [i, j] : kPairs) c.push_back(m(i, j));
  return WedgePoint(std::move(c));
}

Poly WedgePoint::coord(std::size_t i, std::size_t j) const {
  if (i == j) return zero_in(coords_.front().ring());
  return i < j ? coords_[wedge_index(i, j)] : -coords_[wedge_index(j, i)];
}

bool WedgePoint::is_constant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Poly& p) { return p.is_constant(); });
}

RationalVector WedgePoint::rationals() const {
  RationalVector out;
  for (const auto& p : coords_) out.push_back(p.constant_value());
  return out;
}

WedgePoint WedgePoint::normalized() const { return WedgePoint(normalize_projective(coords_)); }

PolyMatrix WedgePoint::skew_matrix() const {
  PolyMatrix m(5, 5, coords_.front().ring());
  for (const auto& [i, j] : kPairs) {
    m(i, j) = coord(i, j);
    m(j, i) = -coord(i, j);
  }
  return m;
}

std::string WedgePoint::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    if (coords_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = coords_[k].is_constant() && coords_[k].constant_value() == 1;
    if (!unit) os << "(" << coords_[k].to_string() << ")*";
    os << wedge_label(k);
  }
  return os.str();
}

bool operator==(const WedgePoint& a, const WedgePoint& b) {
  for (std::size_t k = 0; k < kWedgeDim; ++k) {
    if (a.coords_[k] != b.coords_[k]) return false;
  }
  return true;
}

bool projectively_equal(const WedgePoint& a, const WedgePoint& b) {
  return projectively_equal(a.coords(), b.coords());
}

WedgePoint plucker_embed(const std::vector<Poly>& u0, const std::vector<Poly>& v0) {
  if (u0.size() != 5 || v0.size() != 5) throw std::invalid_argument("plucker_embed needs points of P^4");
  std::vector<Poly> all(u0);
  all.insert(all.end(), v0.begin(), v0.end());
  all = in_common_ring(std::move(all));
  std::vector<Poly> p;
  for (const auto& [i, j] : kPairs) p.push_back(all[i] * all[5 + j] - all[j] * all[5 + i]);
  if (std::all_of(p.begin(), p.end(), [](const Poly& x) { return x.is_zero(); })) {
    throw DegenerateSpanError("plucker_embed: the two points are proportional");
  }
  return WedgePoint(std::move(p));
}

WedgePoint plucker_embed(const RationalVector& u, const RationalVector& v) {
  return plucker_embed(std::vector<Poly>(u.begin(), u.end()), std::vector<Poly>(v.begin(), v.end()));
}

Poly plucker_quadric(std::size_t omitted) {
  if (omitted > 4) throw std::invalid_argument("plucker_quadric: index out of range");
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < 5; ++k) {
    if (k != omitted) idx.push_back(k);
  }
  const auto ring = plucker_ring();
  auto x = [&](std::size_t i, std::size_t j) { return Poly::variable(ring, wedge_index(i, j)); };
  const std::size_t a = idx[0], b = idx[1], c = idx[2], d = idx[3];
  return x(a, b) * x(c, d) - x(a, c) * x(b, d) + x(a, d) * x(b, c);
}

std::vector<Poly> plucker_quadrics() {
  std::vector<Poly> out;
  for (std::size_t m = 0; m < 5; ++m) out.push_back(plucker_quadric(m));
  return out;
}

Poly evaluate_form(const Poly& form, const WedgePoint& p) {
  return compose(form.in_ring(plucker_ring()), p.coords());
}

bool grassmann_membership(const WedgePoint& p) {
  for (const auto& q : plucker_quadrics()) {
    if (!evaluate_form(q, p).is_zero()) return false;
  }
  return true;
}

std::vector<Poly> w_hyperplanes() {
  const auto ring = plucker_ring();
  auto x = [&](std::size_t i, std::size_t j) { return Poly::variable(ring, wedge_index(i, j)); };
  return {x(0, 3) - x(1, 4), x(0, 4) - x(2, 3)};
}

bool p7_membership(const WedgePoint& p) {
  for (const auto& h : w_hyperplanes()) {
    if (!evaluate_form(h, p).is_zero()) return false;
  }
  return true;
}

bool w_membership(const WedgePoint& p) { return p7_membership(p) && grassmann_membership(p); }

bool special_section_Yo(const WedgePoint& p) {
  if (!w_membership(p)) throw std::domain_error("special_section_Yo: point is not on W: " + p.to_string());
  return p[wedge_index(3, 4)].is_zero();
}

PolyMatrix skew_form_of(const Poly& linear_form) {
  const Poly h = linear_form.in_ring(plucker_ring());
  if (h.total_degree() > 1 || !h.is_homogeneous()) throw std::invalid_argument("skew_form_of needs a linear form");
  PolyMatrix m(5, 5, make_ring({}));
  for (const auto& [i, j] : kPairs) {
    Exponents e(kWedgeDim, 0);
    e[wedge_index(i, j)] = 1;
    const Rational c = h.coefficient(e);
    m(i, j) = Poly(c);
    m(j, i) = Poly(Rational(-c));
  }
  return m;
}

PolyMatrix SkewFormPencil::matrix() const {
  const auto ring = make_ring(params);
  const Poly t0 = Poly::variable(ring, 0);
  const Poly t1 = Poly::variable(ring, 1);
  return (t0 * H0.in_ring(ring)) + (t1 * H1.in_ring(ring));
}

SkewFormPencil make_skew_pencil(PolyMatrix H0, PolyMatrix H1) {
  for (const auto* m : {&H0, &H1}) {
    if (m->rows() != 5 || m->cols() != 5 || !m->is_skew_symmetric()) {
      throw std::invalid_argument("skew pencil members must be 5x5 skew-symmetric");
    }
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        if (!(*m)(r, c).is_constant()) throw std::invalid_argument("skew pencil members must be constant");
      }
    }
  }
  return SkewFormPencil{H0.in_ring(make_ring({})), H1.in_ring(make_ring({})), {"t0", "t1"}};
}

SkewFormPencil canonical_pencil() {
  const auto h = w_hyperplanes();
  return make_skew_pencil(skew_form_of(h[0]), skew_form_of(h[1]));
}

SkewFormPencil tabulated_pencil() {
  PolyMatrix h0(5, 5, make_ring({}));
  PolyMatrix h1(5, 5, make_ring({}));
  auto put = [](PolyMatrix& m, std::size_t i, std::size_t j, long v) {
    m(i, j) = Poly(v);
    m(j, i) = Poly(-v);
  };
  put(h0, 0, 3, 1);
  put(h0, 1, 4, -1);
  put(h1, 0, 4, 1);
  put(h1, 2, 3, 1);
  return make_skew_pencil(h0, h1);
}

RankCertificate pencil_rank_certificate(const SkewFormPencil& pen) {
  const PolyMatrix m = pen.matrix();
  RankCertificate cert;
  cert.generic_rank = rank_over_fraction_field(m);
  if (cert.generic_rank >= 4) {
    cert.minor_gcd = minor_gcd(m, 4);
    cert.everywhere_rank_ge_4 = cert.minor_gcd.is_constant() && !cert.minor_gcd.is_zero();
  } else {
    cert.minor_gcd = Poly(m.ring(), Rational(0));
  }
  return cert;
}

std::vector<Poly> conic_of_centers(const SkewFormPencil& pen) {
  const RankCertificate cert = pencil_rank_certificate(pen);
  if (cert.generic_rank != 4 || !cert.everywhere_rank_ge_4) {
    throw DegeneratePencilError("conic_of_centers: pencil is not of constant rank 4 (generic rank " +
                                std::to_string(cert.generic_rank) + ")");
  }
  const auto ker = kernel_over_fraction_field(pen.matrix());
  return ker.at(0).column_entries(0);
}

WedgePoint tangent_wedge(const std::vector<Poly>& curve) {
  const auto x = in_common_ring(curve);
  if (x.front().num_variables() < 2) throw std::invalid_argument("tangent_wedge needs a curve in (t0, t1)");
  std::vector<Poly> dx;
  for (const auto& p : x) dx.push_back(p.derivative(1));
  return plucker_embed(x, dx).normalized();
}

std::vector<Poly> rho_coordinates(const WedgePoint& p) {
  return {p[wedge_index(0, 1)], p[wedge_index(0, 2)], p[wedge_index(1, 2)]};
}

Poly implicit_conic(const std::vector<Poly>& param0, const Variables& names) {
  if (param0.size() != names.size()) throw std::invalid_argument("implicit_conic: names/param size mismatch");
  const auto param = in_common_ring(param0);
  const auto monos = monomials_of_degree(names.size(), 2);
  std::vector<Poly> values;
  for (const auto& e : monos) {
    Poly v(param.front().ring(), Rational(1));
    for (std::size_t i = 0; i < e.size(); ++i) v *= param[i].pow(static_cast<unsigned>(e[i]));
    values.push_back(std::move(v));
  }
  std::map<Exponents, std::size_t, GrlexLess> row_of;
  for (const auto& v : values) {
    for (const auto& [e, c] : v.terms()) row_of.emplace(e, row_of.size());
  }
  RationalMatrix a(row_of.size(), RationalVector(monos.size(), Rational(0)));
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (const auto& [e, c] : values[j].terms()) a[row_of.at(e)][j] = c;
  }
  const auto ns = nullspace(a, monos.size());
  if (ns.size() != 1) {
    throw DegenerateSpanError("implicit_conic: expected a unique conic, found a " + std::to_string(ns.size()) +
                              "-dimensional family");
  }
  const auto ring = make_ring(names);
  Poly q(ring, Rational(0));
  for (std::size_t j = 0; j < monos.size(); ++j) q += Poly::monomial(ring, monos[j], ns[0][j]);
  return primitive_part(q);
}

PlaneOnW rho_plane() {
  PlaneOnW plane;
  plane.kind = PlaneOnW::Kind::rho;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Poly> e(5, Poly(0));
    e[i] = Poly(1);
    plane.subspace.push_back(std::move(e));
  }
  return plane;
}

PlaneOnW sigma_plane(const SkewFormPencil& pen) {
  const auto x = conic_of_centers(pen);
  const auto tring = x.front().ring();
  // l = H(s) x for symbolic s; the s-dependence is a scalar factor.
  const auto sring = merge_rings(*tring, Variables{"__s0", "__s1"});
  const Poly s0 = Poly::variable(sring, sring->size() - 2);
  const Poly s1 = Poly::variable(sring, sring->size() - 1);
  const PolyMatrix hs = s0 * pen.H0.in_ring(sring) + s1 * pen.H1.in_ring(sring);
  std::vector<Poly> xs;
  for (const auto& p : x) xs.push_back(p.in_ring(sring));
  const PolyMatrix l = hs * PolyMatrix::column(xs);
  auto ell = normalize_projective(l.column_entries(0));
  for (auto& p : ell) {
    if (p.involves(sring->size() - 2) || p.involves(sring->size() - 1)) {
      throw DegeneratePencilError("sigma_plane: hyperplane depends on the auxiliary pencil member");
    }
    p = p.in_ring(tring);
  }
  PlaneOnW plane;
  plane.kind = PlaneOnW::Kind::sigma;
  plane.center = x;
  plane.hyperplane = ell;
  std::vector<std::vector<Poly>> row{ell};
  for (const auto& v : kernel_over_fraction_field(PolyMatrix(row))) plane.subspace.push_back(v.column_entries(0));
  return plane;
}

PlaneOnW sigma_plane(const SkewFormPencil& pen, const Rational& t0, const Rational& t1) {
  if (t0 == 0 && t1 == 0) throw std::invalid_argument("sigma_plane: (0:0) is not a parameter value");
  const PlaneOnW symbolic = sigma_plane(pen);
  const RationalVector t{t0, t1};
  auto eval = [&](const std::vector<Poly>& v) {
    RationalVector out;
    for (const auto& p : v) out.push_back(p.evaluate(t));
    out = normalize_projective(out);
    return std::vector<Poly>(out.begin(), out.end());
  };
  PlaneOnW plane;
  plane.kind = PlaneOnW::Kind::sigma;
  plane.center = eval(symbolic.center);
  plane.hyperplane = eval(symbolic.hyperplane);
  RationalMatrix row{RationalVector{}};
  for (const auto& p : plane.hyperplane) row[0].push_back(p.constant_value());
  for (const auto& v : nullspace(row, 5)) plane.subspace.emplace_back(v.begin(), v.end());
  return plane;
}

WedgePoint plane_generic_point(const PlaneOnW& plane) {
  std::vector<std::vector<Poly>> gens;
  if (plane.kind == PlaneOnW::Kind::rho) {
    for (std::size_t a = 0; a < plane.subspace.size(); ++a) {
      for (std::size_t b = a + 1; b < plane.subspace.size(); ++b) {
        gens.push_back(plucker_embed(plane.subspace[a], plane.subspace[b]).coords());
      }
    }
  } else {
    for (const auto& w : plane.subspace) {
      try {
        gens.push_back(plucker_embed(plane.center, w).coords());
      } catch (const DegenerateSpanError&) {
        // w proportional to the center contributes nothing.
      }
    }
  }
  std::vector<Poly> flat;
  for (const auto& g : gens) flat.insert(flat.end(), g.begin(), g.end());
  Variables cs;
  for (std::size_t k = 0; k < gens.size(); ++k) cs.push_back("c" + std::to_string(k));
  const auto ring = merge_rings(*common_ring(flat), cs);
  std::vector<Poly> coords(kWedgeDim, Poly(ring, Rational(0)));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Poly c = Poly::variable(ring, index_of(*ring, cs[k]));
    for (std::size_t i = 0; i < kWedgeDim; ++i) coords[i] += c * gens[k][i].in_ring(ring);
  }
  return WedgePoint(std::move(coords));
}

}  // namespace fano10
