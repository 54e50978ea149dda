#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fano10/rational.hpp"

namespace fano10 {

using Exponents = std::vector<int>;
using Variables = std::vector<std::string>;

/// Graded lexicographic order: total degree first, ties broken
/// lexicographically with the first declared variable most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Q in a fixed, ordered list of
/// indeterminates. Terms are kept in grlex order and zero coefficients are
/// never stored.
///
/// Binary operations require both operands to live over the same variable
/// list; a polynomial over the empty list (a bare constant) is promoted to
/// the other operand's ring.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  Poly();
  explicit Poly(Variables vars);
  Poly(Variables vars, const Rational& constant);
  Poly(std::shared_ptr<const Variables> ring, TermMap terms);
  Poly(std::shared_ptr<const Variables> ring, const Rational& constant);

  // Implicit on purpose: lets integer and rational literals mix with Polys.
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant);             // NOLINT(google-explicit-constructor)
  Poly(int constant) : Poly(static_cast<long>(constant)) {}  // NOLINT

  static Poly variable(const Variables& vars, std::string_view name);
  static Poly variable(std::shared_ptr<const Variables> ring, std::size_t index);
  static Poly monomial(std::shared_ptr<const Variables> ring, Exponents exps, const Rational& coeff);

  const Variables& variables() const { return *ring_; }
  const std::shared_ptr<const Variables>& ring() const { return ring_; }
  std::size_t num_variables() const { return ring_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial. Throws std::domain_error otherwise.
  Rational constant_value() const;
  Rational coefficient(const Exponents& exps) const;

  /// Maximal total degree of a stored term; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// True iff a term with a positive exponent of var exists.
  bool involves(std::size_t var) const;

  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  /// Same polynomial over another variable list, matching variables by name.
  /// Throws std::invalid_argument if a used variable is absent from vars.
  Poly in_ring(std::shared_ptr<const Variables> vars) const;
  Poly in_ring(const Variables& vars) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);
  Poly& operator/=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator/(Poly a, const Rational& s) { return a /= s; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(unsigned exponent) const;
  Rational evaluate(std::span<const Rational> point) const;
  Poly substitute(std::size_t var, const Poly& value) const;
  Poly derivative(std::size_t var) const;
  /// Coefficients c_k (free of var) with *this = sum_k c_k var^k.
  std::vector<Poly> coefficients_in(std::size_t var) const;

  std::string to_string() const;

 private:
  void promote_to(const std::shared_ptr<const Variables>& ring);
  void align_with(Poly& other);

  std::shared_ptr<const Variables> ring_;
  TermMap terms_;
};

std::shared_ptr<const Variables> make_ring(Variables vars);
std::size_t index_of(const Variables& vars, std::string_view name);
/// Zero-based list of variable polynomials for every indeterminate of ring.
std::vector<Poly> ring_variables(const std::shared_ptr<const Variables>& ring);
bool same_ring(const Poly& a, const Poly& b);
/// Variables of a followed by those of b not already in a.
std::shared_ptr<const Variables> merge_rings(const Variables& a, const Variables& b);

/// f(images[0], ..., images[n-1]); all images must share one ring.
Poly compose(const Poly& f, std::span<const Poly> images);

/// Multivariate division by a single divisor in grlex order:
/// f = q * g + r with no term of r divisible by the leading monomial of g.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g);
/// Throws std::domain_error if g does not divide f.
Poly divide_exact(const Poly& f, const Poly& g);

/// gcd of numerators over lcm of denominators; zero for the zero polynomial.
Rational rational_content(const Poly& f);
/// f scaled to integer coefficients with content 1 and positive leading
/// coefficient. Zero stays zero.
Poly primitive_part(const Poly& f);
/// f scaled so its lex-leading coefficient (first variable most
/// significant) equals one. Zero stays zero.
Poly monic_lex(const Poly& f);

/// Greatest common divisor, normalized by primitive_part(); a nonzero
/// constant gcd is returned as 1 and gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Pseudo-remainder of f by g with respect to var.
Poly pseudo_remainder(const Poly& f, const Poly& g, std::size_t var);

/// den^k * f(var := num/den) with k = degree of f in var, so the result
/// stays polynomial. den must be nonzero.
Poly substitute_fraction(const Poly& f, std::size_t var, const Poly& num, const Poly& den);

}  // namespace fano10
