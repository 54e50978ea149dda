#include "fano10/linear.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fano10 {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

std::vector<RationalVector> nullspace(RationalMatrix m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("nullspace: row length mismatch");
  }
  const auto pivots = row_reduce(m);
  std::vector<RationalVector> basis;
  for (std::size_t j = 0; j < cols; ++j) {
    if (std::find(pivots.begin(), pivots.end(), j) != pivots.end()) continue;
    RationalVector v(cols, Rational(0));
    v[j] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  if (m.empty()) return RationalVector{};
  const std::size_t cols = m.front().size();
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  RationalMatrix out(a.size(), RationalVector(cols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw std::invalid_argument("multiply: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].size() != n) throw std::invalid_argument("determinant: matrix not square");
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix id(n, RationalVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("inverse: matrix not square");
    aug[i].resize(2 * n, Rational(0));
    aug[i][n + i] = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  RationalMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return inv;
}

std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  // Enumerate compositions of d; sort afterwards for a canonical order.
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

bool ideal_membership_truncated(const Poly& f, const std::vector<Poly>& gens, int d) {
  if (!f.is_homogeneous()) throw std::domain_error("ideal_membership_truncated: f is not homogeneous");
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw std::domain_error("ideal_membership_truncated: generator is not homogeneous");
  }
  if (f.is_zero()) return true;
  const int df = f.total_degree();
  if (d < df) throw std::invalid_argument("ideal_membership_truncated: cap below deg f");
  // Homogeneous inputs: only the degree-deg(f) slice of the ideal can
  // contribute, so the cap only has to admit it.
  auto ring = f.ring();
  for (const auto& g : gens) {
    if (g.num_variables() > ring->size()) ring = g.ring();
  }
  const Poly target = f.in_ring(ring);
  const auto rows = monomials_of_degree(ring->size(), df);
  std::map<Exponents, std::size_t, GrlexLess> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
  std::vector<std::vector<Rational>> columns;
  for (const auto& g0 : gens) {
    if (g0.is_zero()) continue;
    const Poly g = g0.in_ring(ring);
    const int shift = df - g.total_degree();
    for (const auto& m : monomials_of_degree(ring->size(), shift)) {
      std::vector<Rational> col(rows.size(), Rational(0));
      for (const auto& [e, c] : g.terms()) {
        Exponents s = e;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
        col[row_of.at(s)] = c;
      }
      columns.push_back(std::move(col));
    }
  }
  RationalMatrix a(rows.size(), RationalVector(columns.size(), Rational(0)));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < rows.size(); ++i) a[i][j] = columns[j][i];
  }
  RationalVector b(rows.size(), Rational(0));
  for (const auto& [e, c] : target.terms()) b[row_of.at(e)] = c;
  if (columns.empty()) return false;
  return solve(a, b).has_value();
}

bool ideal_membership_truncated(const Poly& f, const std::vector<Poly>& gens) {
  return ideal_membership_truncated(f, gens, std::max(f.total_degree(), 0) + 2);
}

BinaryFormRoots binary_form_roots_squarefree(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("binary_form_roots_squarefree: zero form");
  if (f.num_variables() != 2) throw std::invalid_argument("binary_form_roots_squarefree: need exactly two variables");
  if (!f.is_homogeneous()) throw std::domain_error("binary_form_roots_squarefree: form is not homogeneous");
  const Poly g = gcd(gcd(f, f.derivative(0)), f.derivative(1));
  return {f.total_degree(), g.is_constant()};
}

}  // namespace fano10
