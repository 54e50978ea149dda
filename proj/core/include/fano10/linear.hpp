#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fano10/poly.hpp"

namespace fano10 {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);
std::size_t rank(RationalMatrix m);
/// Basis of {x : m x = 0}. `cols` is needed when m has no rows.
std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols);
/// Some solution of m x = b, or nullopt if the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
Rational determinant(RationalMatrix m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);
RationalMatrix identity_matrix(std::size_t n);

/// Exponent vectors of total degree d in n variables, ascending grlex.
std::vector<Exponents> monomials_of_degree(std::size_t n, int d);

/// Whether f = sum h_i g_i with deg(h_i g_i) <= d. All inputs must be
/// homogeneous (std::domain_error otherwise) and d >= deg f
/// (std::invalid_argument otherwise).
bool ideal_membership_truncated(const Poly& f, const std::vector<Poly>& gens, int d);
/// Same with the default cap deg f + 2.
bool ideal_membership_truncated(const Poly& f, const std::vector<Poly>& gens);

struct BinaryFormRoots {
  int degree = 0;
  bool squarefree = false;
};

/// Degree of a nonzero homogeneous form in exactly two variables and
/// whether gcd(f, df/dx, df/dy) is constant.
BinaryFormRoots binary_form_roots_squarefree(const Poly& f);

}  // namespace fano10
