#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fano10/linear.hpp"
#include "fano10/poly.hpp"
#include "fano10/poly_matrix.hpp"

namespace fano10 {

inline constexpr std::size_t kWedgeDim = 10;

/// Position of e_ij (i < j) in the order e01, e02, e03, e04, e12, e13, e14,
/// e23, e24, e34.
std::size_t wedge_index(std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> wedge_pair(std::size_t index);
std::string wedge_label(std::size_t index);

/// Dual coordinates x01, ..., x34 on P^9.
std::shared_ptr<const Variables> plucker_ring();

/// Point of P^9 = P(wedge^2 C^5), possibly with polynomial coordinates.
class WedgePoint {
 public:
  /// Throws std::invalid_argument unless there are 10 coordinates, not all zero.
  explicit WedgePoint(std::vector<Poly> coords);
  static WedgePoint from_rationals(const RationalVector& coords);
  static WedgePoint basis(std::size_t i, std::size_t j);
  /// Upper triangle of a 5x5 skew matrix.
  static WedgePoint from_skew(const PolyMatrix& m);

  const std::vector<Poly>& coords() const { return coords_; }
  const Poly& operator[](std::size_t index) const { return coords_.at(index); }
  /// p_ij with p_ji = -p_ij and p_ii = 0.
  Poly coord(std::size_t i, std::size_t j) const;

  bool is_constant() const;
  /// Rational coordinates; throws std::domain_error if some entry is not constant.
  RationalVector rationals() const;
  WedgePoint normalized() const;
  PolyMatrix skew_matrix() const;
  std::string to_string() const;

  friend bool operator==(const WedgePoint& a, const WedgePoint& b);

 private:
  std::vector<Poly> coords_;
};

bool projectively_equal(const WedgePoint& a, const WedgePoint& b);

/// p_ij = u_i v_j - u_j v_i. Throws DegenerateSpanError for proportional inputs.
WedgePoint plucker_embed(const std::vector<Poly>& u, const std::vector<Poly>& v);
WedgePoint plucker_embed(const RationalVector& u, const RationalVector& v);

/// The Pfaffian of the 4x4 principal block omitting `omitted`, as a quadric
/// in the Plücker ring.
Poly plucker_quadric(std::size_t omitted);
std::vector<Poly> plucker_quadrics();

/// Forms over plucker_ring() evaluated on the coordinates of p.
Poly evaluate_form(const Poly& form, const WedgePoint& p);

bool grassmann_membership(const WedgePoint& p);
/// H0 = x03 - x14 and H1 = x04 - x23.
std::vector<Poly> w_hyperplanes();
bool p7_membership(const WedgePoint& p);
bool w_membership(const WedgePoint& p);
/// p34 == 0. Throws std::domain_error if p is not on W.
bool special_section_Yo(const WedgePoint& p);

/// Skew matrix of a linear form h on P^9, so that h(u ^ v) = u^T H v.
PolyMatrix skew_form_of(const Poly& linear_form);

struct SkewFormPencil {
  PolyMatrix H0;
  PolyMatrix H1;
  Variables params{"t0", "t1"};

  /// t0 H0 + t1 H1 over the ring of the parameters.
  PolyMatrix matrix() const;
  std::shared_ptr<const Variables> ring() const { return make_ring(params); }
};

/// Throws std::invalid_argument unless both matrices are constant, 5x5 and skew.
SkewFormPencil make_skew_pencil(PolyMatrix H0, PolyMatrix H1);
/// Pencil of skew forms of H0, H1 under skew_form_of: the one cutting out W.
SkewFormPencil canonical_pencil();
/// The literal table h03 = -h14 = t0, h04 = h23 = t1.
SkewFormPencil tabulated_pencil();

struct RankCertificate {
  std::size_t generic_rank = 0;
  bool everywhere_rank_ge_4 = false;
  Poly minor_gcd;
};

RankCertificate pencil_rank_certificate(const SkewFormPencil& pen);

/// Normalized kernel x(t0, t1) of the pencil. Throws DegeneratePencilError
/// unless the certificate is (4, true).
std::vector<Poly> conic_of_centers(const SkewFormPencil& pen);

/// x ^ dx/dt for a curve in P^4 with homogeneous entries in (t0, t1),
/// derivative taken in the affine parameter t = t1/t0, projectively normalized.
WedgePoint tangent_wedge(const std::vector<Poly>& curve);

/// The coordinates (x01, x02, x12) of a point of the rho-plane.
std::vector<Poly> rho_coordinates(const WedgePoint& p);

/// The unique (up to scale) quadratic form in `names` vanishing on the
/// parametrized curve `param`. Throws DegenerateSpanError if not unique.
Poly implicit_conic(const std::vector<Poly>& param, const Variables& names);

struct PlaneOnW {
  enum class Kind { rho, sigma };
  Kind kind = Kind::rho;
  /// sigma: the center x in P^4 and the covector of the hyperplane P^3.
  std::vector<Poly> center;
  std::vector<Poly> hyperplane;
  /// Basis of the linear subspace of C^5 swept by the lines (P^2 for rho,
  /// P^3 for sigma).
  std::vector<std::vector<Poly>> subspace;
};

PlaneOnW rho_plane();
/// sigma-plane at the parameter value (t0 : t1); symbolic in (t0, t1) when
/// called without values.
PlaneOnW sigma_plane(const SkewFormPencil& pen);
PlaneOnW sigma_plane(const SkewFormPencil& pen, const Rational& t0, const Rational& t1);

/// Generic point of the plane in P^9 as a WedgePoint whose coordinates are
/// linear in fresh coefficients c0, c1, ... (plus any parameters of the plane).
WedgePoint plane_generic_point(const PlaneOnW& plane);

}  // namespace fano10
