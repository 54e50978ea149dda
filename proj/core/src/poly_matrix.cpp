#include "fano10/poly_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fano10 {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::shared_ptr<const Variables> ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)) {
  data_.assign(rows * cols, Poly(ring_, Rational(0)));
}

PolyMatrix::PolyMatrix(std::vector<std::vector<Poly>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("PolyMatrix: ragged rows");
    for (const auto& e : row) {
      if (e.num_variables() > 0 && ring_->empty()) ring_ = e.ring();
    }
  }
  data_.reserve(rows_ * cols_);
  for (auto& row : rows) {
    for (auto& e : row) data_.push_back(e.in_ring(ring_));
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::shared_ptr<const Variables> ring) {
  PolyMatrix m(n, n, std::move(ring));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(m.ring_, Rational(1));
  return m;
}

PolyMatrix PolyMatrix::column(std::vector<Poly> entries) {
  std::vector<std::vector<Poly>> rows;
  rows.reserve(entries.size());
  for (auto& e : entries) rows.push_back({std::move(e)});
  return PolyMatrix(std::move(rows));
}

const Poly& PolyMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix index out of range");
  return (*this)(r, c);
}

void PolyMatrix::set(std::size_t r, std::size_t c, const Poly& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("PolyMatrix index out of range");
  (*this)(r, c) = value.in_ring(ring_);
}

std::vector<Poly> PolyMatrix::column_entries(std::size_t c) const {
  std::vector<Poly> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

std::vector<Poly> PolyMatrix::row_entries(std::size_t r) const {
  std::vector<Poly> out;
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, ring_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

PolyMatrix PolyMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  PolyMatrix s(row_idx.size(), col_idx.size(), ring_);
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = at(row_idx[i], col_idx[j]);
  }
  return s;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& fn) const {
  std::vector<std::vector<Poly>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(fn((*this)(r, c)));
  }
  PolyMatrix m(std::move(out));
  if (m.ring_->empty() && !ring_->empty()) return m.in_ring(ring_);
  return m;
}

PolyMatrix PolyMatrix::in_ring(std::shared_ptr<const Variables> ring) const {
  PolyMatrix m(rows_, cols_, ring);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].in_ring(ring);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool PolyMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(*this)(r, r).is_zero()) return false;
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != -(*this)(c, r)) return false;
    }
  }
  return true;
}

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("PolyMatrix shape mismatch");
}

}  // namespace

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  std::vector<std::vector<Poly>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r].push_back(a(r, c) + b(r, c));
  }
  return PolyMatrix(std::move(out));
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  std::vector<std::vector<Poly>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r].push_back(a(r, c) - b(r, c));
  }
  return PolyMatrix(std::move(out));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("PolyMatrix product dimension mismatch");
  std::vector<std::vector<Poly>> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Poly sum(Rational(0));
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a(r, k).is_zero() && !b(k, c).is_zero()) sum += a(r, k) * b(k, c);
      }
      out[r].push_back(std::move(sum));
    }
  }
  if (a.rows() == 0 || b.cols() == 0) return PolyMatrix(a.rows(), b.cols(), a.ring());
  PolyMatrix m(std::move(out));
  return m.ring()->empty() ? m.in_ring(a.ring()->empty() ? b.ring() : a.ring()) : m;
}

PolyMatrix operator*(const Poly& s, const PolyMatrix& m) {
  return m.map([&s](const Poly& e) { return s * e; });
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (a.data_[i] != b.data_[i]) return false;
  }
  return true;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

void require_square(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  }
}

Poly det_cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = cols.size();
  if (n == 0) return Poly(m.ring(), Rational(1));
  if (n == 1) return m(row, cols[0]);
  if (n == 2) return m(row, cols[0]) * m(row + 1, cols[1]) - m(row, cols[1]) * m(row + 1, cols[0]);
  Poly sum(m.ring(), Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    const Poly& entry = m(row, cols[j]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) rest.push_back(cols[k]);
    }
    Poly minor = det_cofactor_rec(m, rest, row + 1);
    if (j % 2 == 0) sum += entry * minor;
    else sum -= entry * minor;
  }
  return sum;
}

/// Fraction-free row echelon form. Records pivot rows (original indices) and
/// pivot columns; sign is the parity of the row permutation.
struct Echelon {
  std::vector<Poly> a;
  std::vector<std::size_t> row_order;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
  Poly last_pivot;
};

Echelon bareiss(const PolyMatrix& m, bool stop_on_singular_square) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Echelon e;
  e.a.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) e.a.push_back(m(r, c));
  }
  e.row_order.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) e.row_order[r] = r;
  auto at = [&](std::size_t r, std::size_t c) -> Poly& { return e.a[r * cols + c]; };
  Poly prev(m.ring(), Rational(1));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    // Prefer the pivot with the fewest terms to limit growth.
    std::size_t best = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!at(r, c).is_zero() && (best == rows || at(r, c).num_terms() < at(best, c).num_terms())) best = r;
    }
    if (best == rows) {
      if (stop_on_singular_square) {
        e.last_pivot = Poly(m.ring(), Rational(0));
        return e;
      }
      continue;
    }
    if (best != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(best, k), at(rank, k));
      std::swap(e.row_order[best], e.row_order[rank]);
      e.sign = -e.sign;
    }
    const Poly pivot = at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Poly factor = at(r, c);
      for (std::size_t k = c + 1; k < cols; ++k) {
        Poly v = pivot * at(r, k) - factor * at(rank, k);
        at(r, k) = prev.is_constant() ? v / prev.constant_value() : divide_exact(v, prev);
      }
      at(r, c) = Poly(m.ring(), Rational(0));
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++rank;
  }
  e.last_pivot = prev;
  return e;
}

}  // namespace

Poly det_cofactor(const PolyMatrix& m) {
  require_square(m);
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return det_cofactor_rec(m, cols, 0);
}

Poly det_bareiss(const PolyMatrix& m) {
  require_square(m);
  if (m.rows() == 0) return Poly(m.ring(), Rational(1));
  Echelon e = bareiss(m, true);
  if (e.pivot_cols.size() < m.rows()) return Poly(m.ring(), Rational(0));
  return e.sign > 0 ? e.last_pivot : -e.last_pivot;
}

Poly poly_det(const PolyMatrix& m) {
  require_square(m);
  return m.rows() < 5 ? det_cofactor(m) : det_bareiss(m);
}

std::size_t rank_over_fraction_field(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m, false).pivot_cols.size();
}

Poly minor_gcd(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) {
    throw std::invalid_argument("minor_gcd: k must satisfy 1 <= k <= min(rows, cols)");
  }
  Poly g(m.ring(), Rational(0));
  for (const auto& rs : combinations(m.rows(), k)) {
    for (const auto& cs : combinations(m.cols(), k)) {
      Poly minor = poly_det(m.submatrix(rs, cs));
      if (minor.is_zero()) continue;
      g = gcd(g, minor);
      if (g.is_constant()) return Poly(m.ring(), Rational(1));
    }
  }
  return monic_lex(g);
}

std::vector<PolyMatrix> kernel_over_fraction_field(const PolyMatrix& m) {
  std::vector<PolyMatrix> basis;
  const std::size_t n = m.cols();
  if (n == 0) return basis;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Poly> v(n, Poly(m.ring(), Rational(0)));
      v[j] = Poly(m.ring(), Rational(1));
      basis.push_back(PolyMatrix::column(std::move(v)));
    }
    return basis;
  }
  Echelon e = bareiss(m, false);
  const std::size_t r = e.pivot_cols.size();
  std::vector<std::size_t> prow(e.row_order.begin(), e.row_order.begin() + static_cast<std::ptrdiff_t>(r));
  const std::vector<std::size_t>& pcol = e.pivot_cols;
  const PolyMatrix a = m.submatrix(prow, pcol);
  const Poly d = poly_det(a);
  for (std::size_t j = 0; j < n; ++j) {
    if (std::find(pcol.begin(), pcol.end(), j) != pcol.end()) continue;
    std::vector<Poly> v(n, Poly(m.ring(), Rational(0)));
    v[j] = d;
    for (std::size_t i = 0; i < r; ++i) {
      PolyMatrix ai = a;
      for (std::size_t row = 0; row < r; ++row) ai(row, i) = m(prow[row], j);
      v[pcol[i]] = -poly_det(ai);
    }
    basis.push_back(PolyMatrix::column(normalize_projective(std::move(v))).in_ring(m.ring()));
  }
  return basis;
}

std::vector<Poly> normalize_projective(std::vector<Poly> v) {
  Poly g;
  bool any = false;
  for (const auto& p : v) {
    if (p.is_zero()) continue;
    g = any ? gcd(g, p) : primitive_part(p);
    any = true;
  }
  if (!any) return v;
  if (!g.is_constant()) {
    for (auto& p : v) p = divide_exact(p, g);
  }
  Integer num = 0;
  Integer den = 1;
  for (const auto& p : v) {
    for (const auto& [e, c] : p.terms()) {
      num = gcd(num, c.get_num());
      den = lcm(den, c.get_den());
    }
  }
  Rational scale = make_rational(den, num);
  for (const auto& p : v) {
    if (!p.is_zero()) {
      if (p.leading_coefficient() < 0) scale = -scale;
      break;
    }
  }
  for (auto& p : v) p *= scale;
  return v;
}

std::vector<Rational> normalize_projective(std::vector<Rational> v) {
  Integer num = 0;
  Integer den = 1;
  for (const auto& c : v) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  if (num == 0) return v;
  Rational scale = make_rational(den, num);
  for (const auto& c : v) {
    if (c != 0) {
      if (c < 0) scale = -scale;
      break;
    }
  }
  for (auto& c : v) c *= scale;
  return v;
}

bool projectively_equal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  if (a.size() != b.size()) return false;
  const auto na = normalize_projective(a);
  const auto nb = normalize_projective(b);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i] != nb[i]) return false;
  }
  return true;
}

bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return a.size() == b.size() && normalize_projective(a) == normalize_projective(b);
}

}  // namespace fano10
