#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fano10/grassmann.hpp"
#include "fano10/poly.hpp"
#include "fano10/poly_matrix.hpp"
#include "fano10/report.hpp"
#include "fano10/serialize.hpp"

namespace fano10 {

/// Coordinates x01, x02, x12, x03, x04, x13, x24 on P^6.
const Variables& p6_coordinates();
/// Their positions in the Plücker basis e01, ..., e34.
const std::array<std::size_t, 7>& p6_wedge_indices();

/// Constant symmetric 7x7 Gram matrix S of the form x^T S x on P^6.
class QuadricForm {
 public:
  /// Throws std::invalid_argument unless `gram` is a constant symmetric 7x7 matrix.
  explicit QuadricForm(PolyMatrix gram);
  /// Throws std::invalid_argument unless `form` is a quadratic form in p6_coordinates().
  static QuadricForm from_polynomial(const Poly& form);
  static QuadricForm from_rationals(const RationalMatrix& gram);

  const PolyMatrix& gram() const { return gram_; }
  Poly polynomial() const;
  std::size_t rank() const;
  /// The 28 upper-triangular Gram entries (row-major).
  RationalVector coefficients() const;

 private:
  PolyMatrix gram_;
};

struct QuadricPencil {
  QuadricForm P0;
  QuadricForm Pinf;
  Variables params{"t0", "t1"};
  /// t0 P0 + t1 Pinf.
  PolyMatrix matrix() const;
};

/// P_o, P_inf: the Plücker quadrics omitting indices 3 and 4, pulled back to
/// P^6 via x14 = x03, x23 = x04.
QuadricPencil pfaffian_pencil_canonical();

struct MatrixRankCertificate {
  std::size_t generic_rank = 0;
  bool everywhere_rank_ge = false;
  Poly minor_gcd;
};

/// Generic rank of the pencil and the gcd of its 6x6 minors.
MatrixRankCertificate pencil_rank_certificate(const QuadricPencil& pen);

struct VertexCurve {
  /// Kernel vector in p6_coordinates() order, homogeneous in (t0, t1).
  std::vector<Poly> point;
  int degree = 0;
  /// The same curve in the Plücker basis of P^9.
  WedgePoint wedge() const;
};

/// Throws DegeneratePencilError unless the pencil has rank 6 everywhere.
VertexCurve vertex_curve(const QuadricPencil& pen);

struct QuadricNet {
  std::array<QuadricForm, 3> generators;
  Variables params{"s0", "s1", "s2"};
  /// s0 Q0 + s1 Q1 + s2 Q2.
  PolyMatrix matrix() const;
};

/// Net spanned by the canonical pencil and q_extra. Throws DegenerateNetError
/// if the three quadrics are linearly dependent.
QuadricNet build_net(const QuadricForm& q_extra);
/// Throws DegenerateNetError for dependent generators.
QuadricNet make_net(const QuadricForm& q0, const QuadricForm& q1, const QuadricForm& q2);

struct PlaneCurve {
  Poly form;
  int degree = 0;
};

/// det Q(s). Throws DegenerateNetError if it vanishes identically.
PlaneCurve determinantal_septic(const QuadricNet& net);

struct LineIntersection {
  /// Number of points counted with multiplicity.
  int count = 0;
  bool distinct = false;
};

struct SepticSplit {
  PlaneCurve residual;
  LineIntersection intersection;
};

/// curve = line * residual. Throws SplitError if `line` does not divide the
/// curve, MultiplicityError if it divides it more than once.
SepticSplit septic_split(const PlaneCurve& curve, const Poly& line);

/// (7 - k)(8 - k)/2 for 1 <= k <= 6; std::domain_error otherwise.
int determinantal_codim(int k);

/// Random symmetric 7x7 matrix with entries in [-9, 9].
QuadricForm random_quadric(std::uint64_t seed);

/// {"quadrics": [M0, M1, M2]} or {"q_extra": M}, matrices as nested arrays.
QuadricNet net_from_json(const Json& j);
Json net_to_json(const QuadricNet& net);

struct SampleOutcome {
  std::uint64_t seed = 0;
  bool valid_net = false;
  int septic_degree = -1;
  bool line_divides_once = false;
  int sextic_degree = -1;
  LineIntersection intersection;
  std::string failure;
  Json septic_coefficients;
  bool ok() const;
};

/// Full pipeline on the net through the canonical pencil and random_quadric(seed).
SampleOutcome analyze_sample(std::uint64_t seed);

ScenarioReport scenario_pfaffian_pencil();
/// Samples seed, seed + 1, ...; passes when at least 90% of them succeed.
ScenarioReport scenario_determinantal_split(std::uint64_t seed, int samples);
/// Pencil, vertex cubic, sampled nets and the degree bookkeeping of the projection.
ScenarioReport node_projection_scenario(std::uint64_t seed, int samples);

}  // namespace fano10
