#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fano10/poly.hpp"

namespace fano10 {

/// Dense matrix of polynomials over a common ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::shared_ptr<const Variables> ring);
  /// Row-major construction; all rows must have equal length. Constant entries
  /// are promoted to the ring of the first non-constant entry.
  PolyMatrix(std::vector<std::vector<Poly>> rows);  // NOLINT(google-explicit-constructor)

  static PolyMatrix identity(std::size_t n, std::shared_ptr<const Variables> ring);
  static PolyMatrix column(std::vector<Poly> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::shared_ptr<const Variables>& ring() const { return ring_; }

  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Poly& value);

  std::vector<Poly> column_entries(std::size_t c) const;
  std::vector<Poly> row_entries(std::size_t r) const;

  PolyMatrix transpose() const;
  PolyMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  PolyMatrix map(const std::function<Poly(const Poly&)>& fn) const;
  PolyMatrix in_ring(std::shared_ptr<const Variables> ring) const;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew_symmetric() const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& s, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::shared_ptr<const Variables> ring_ = make_ring({});
  std::vector<Poly> data_;
};

/// Laplace expansion along the first row. Throws std::invalid_argument if
/// m is not square.
Poly det_cofactor(const PolyMatrix& m);
/// Fraction-free (Bareiss) elimination with exact polynomial division.
Poly det_bareiss(const PolyMatrix& m);
/// Cofactor expansion below size 5, Bareiss from size 5 on.
Poly poly_det(const PolyMatrix& m);

std::size_t rank_over_fraction_field(const PolyMatrix& m);

/// gcd of all k x k minors, scaled monic in lex order; 1 when constant,
/// 0 when every minor vanishes.
Poly minor_gcd(const PolyMatrix& m, std::size_t k);

/// Basis of the right kernel over the fraction field. Each vector has
/// polynomial entries with no common factor and is projectively normalized.
std::vector<PolyMatrix> kernel_over_fraction_field(const PolyMatrix& m);

/// Divides out the polynomial gcd and rational content of the entries and
/// makes the leading coefficient of the first nonzero entry positive.
std::vector<Poly> normalize_projective(std::vector<Poly> v);
std::vector<Rational> normalize_projective(std::vector<Rational> v);
bool projectively_equal(const std::vector<Poly>& a, const std::vector<Poly>& b);
bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// All k-subsets of {0, ..., n-1}, each sorted, in lex order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace fano10
