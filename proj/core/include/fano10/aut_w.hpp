#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fano10/grassmann.hpp"
#include "fano10/linear.hpp"
#include "fano10/poly_matrix.hpp"
#include "fano10/serialize.hpp"

namespace fano10 {

using Mat2 = std::array<std::array<Rational, 2>, 2>;
using Mat32 = std::array<std::array<Rational, 2>, 3>;

/// Element (lambda, U, G) of Aut0(W), acting on C^5 by
///   [[lambda * Symm2(G), U], [0, G]]
/// where column c of the matrix is the image of e_c.
struct AutWElement {
  Rational lambda{1};
  Mat32 U{};
  Mat2 G{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};

  RationalMatrix matrix() const;
  PolyMatrix poly_matrix() const;
  std::string to_string() const;
};

/// Validates lambda != 0, det G = 1 and both U-constraints; throws
/// InvalidElementError naming the violated condition.
AutWElement assemble(const Rational& lambda, const Mat32& U, const Mat2& G);

/// b U00 - a U01 - d U10 + c U11 and d U00 - c U01 - b U20 + a U21.
std::array<Rational, 2> u_constraints(const Mat32& U, const Mat2& G);

RationalMatrix symm2(const Mat2& G);
/// Symbolic Symm2 in the rows (ad+bc, ac, bd), (2ab, a^2, b^2), (2cd, c^2, d^2).
PolyMatrix symm2(const Poly& a, const Poly& b, const Poly& c, const Poly& d);
/// Block matrix without any validation.
PolyMatrix assemble_matrix(const Poly& lambda, const std::array<std::array<Poly, 2>, 3>& U,
                           const std::array<std::array<Poly, 2>, 2>& G);

AutWElement identity_element();
/// [lambda] = (lambda, 0, 1).
AutWElement lambda_element(const Rational& lambda);
/// [u|v|x|y] = (1, [[-u, -v], [v, x], [y, u]], 1).
AutWElement ga_element(const Rational& u, const Rational& v, const Rational& x, const Rational& y);
/// (1, 0, G).
AutWElement pgl2_element(const Mat2& G);
AutWElement inverse(const AutWElement& g);

/// sum_{i<j} p_ij (A e_i) ^ (A e_j), not normalized.
WedgePoint wedge_square_image(const PolyMatrix& a, const WedgePoint& p);
/// Normalized image of p.
WedgePoint wedge_square_action(const AutWElement& g, const WedgePoint& p);
/// 10x10 matrix of wedge^2 A in the basis e01, ..., e34.
RationalMatrix wedge_square_matrix(const RationalMatrix& a);
/// Equality of the induced actions on P^9.
bool same_action(const AutWElement& g, const AutWElement& h);

/// The 8 basis vectors e01, e02, e12, e03+e14, e04+e23, e13, e24, e34 of P^7.
std::vector<WedgePoint> p7_basis();
/// Values of H0 and H1 on the images of the P^7 basis (16 entries).
std::vector<Poly> p7_defects(const PolyMatrix& a);
bool preserves_P7(const PolyMatrix& a);
bool preserves_P7(const AutWElement& g);

struct SymbolicP7Check {
  Variables variables;
  /// Defects reduced on the chart a != 0 (d, U01, U21 eliminated) and on the
  /// chart b != 0 (c, U00, U20 eliminated).
  std::vector<Poly> chart_a;
  std::vector<Poly> chart_b;
  bool holds() const;
};

SymbolicP7Check preserves_P7_symbolic();

struct ClosureResult {
  AutWElement product;
  /// Parameter-wise law observed when both inputs are G_a elements.
  std::optional<std::array<Rational, 4>> ga_parameters;
};

/// Matrix product re-decomposed as (lambda, U, G). Throws
/// ClosureViolationError if it leaves the family.
ClosureResult group_closure_check(const AutWElement& g1, const AutWElement& g2);
/// Decomposition of a 5x5 matrix; nullopt when it is not of the block form.
std::optional<AutWElement> decompose(const RationalMatrix& m);
/// (u, v, x, y) of a G_a element, if it is one.
std::optional<std::array<Rational, 4>> ga_parameters(const AutWElement& g);

enum class OrbitLabel { open_orbit, Yo_minus_rho, rho_minus_qo, qo };
std::string to_string(OrbitLabel label);

/// The Aut0(W)-invariant conic q_o in (x01, x02, x12), obtained by
/// implicitizing the tangent wedges of the conic of centers of W.
Poly invariant_conic();
/// Throws std::domain_error unless p is a rational point of W.
OrbitLabel orbit_classify(const WedgePoint& p);

/// Group element g with g.p = q projectively. nullopt for Yo_minus_rho, and on
/// the rho-plane strata when no det-1 element over Q exists in the search
/// window. Throws std::domain_error if the labels differ.
std::optional<AutWElement> orbit_transitivity_witness(const WedgePoint& p, const WedgePoint& q);

/// {"lambda": r, "G": [a, b, c, d], "U": [U00, U01, U10, U11, U20, U21]}.
Json element_to_json(const AutWElement& g);
/// Validates through assemble().
AutWElement element_from_json(const Json& j);

/// Random element with entries built from integers in [-bound, bound].
AutWElement sample_element(std::mt19937_64& rng, int bound = 3);

}  // namespace fano10
