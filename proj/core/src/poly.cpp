#include "fano10/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fano10 {

namespace {

const std::shared_ptr<const Variables>& empty_ring() {
  static const auto ring = std::make_shared<const Variables>();
  return ring;
}

int exps_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

void add_term(Poly::TermMap& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = exps_degree(a);
  const int db = exps_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::shared_ptr<const Variables> make_ring(Variables vars) {
  if (vars.empty()) return empty_ring();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (vars[i] == vars[j]) throw std::invalid_argument("duplicate variable name: " + vars[i]);
    }
  }
  return std::make_shared<const Variables>(std::move(vars));
}

std::size_t index_of(const Variables& vars, std::string_view name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw std::invalid_argument("unknown variable: " + std::string(name));
  return static_cast<std::size_t>(it - vars.begin());
}

std::vector<Poly> ring_variables(const std::shared_ptr<const Variables>& ring) {
  std::vector<Poly> out;
  out.reserve(ring->size());
  for (std::size_t i = 0; i < ring->size(); ++i) out.push_back(Poly::variable(ring, i));
  return out;
}

bool same_ring(const Poly& a, const Poly& b) {
  return a.ring() == b.ring() || a.variables() == b.variables();
}

std::shared_ptr<const Variables> merge_rings(const Variables& a, const Variables& b) {
  Variables out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return make_ring(std::move(out));
}

Poly::Poly() : ring_(empty_ring()) {}

Poly::Poly(Variables vars) : ring_(make_ring(std::move(vars))) {}

Poly::Poly(Variables vars, const Rational& constant) : Poly(make_ring(std::move(vars)), constant) {}

Poly::Poly(std::shared_ptr<const Variables> ring, TermMap terms)
    : ring_(ring ? std::move(ring) : empty_ring()), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != ring_->size()) throw std::invalid_argument("exponent vector length mismatch");
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  }
}

Poly::Poly(std::shared_ptr<const Variables> ring, const Rational& constant)
    : ring_(ring ? std::move(ring) : empty_ring()) {
  if (constant != 0) terms_.emplace(Exponents(ring_->size(), 0), constant);
}

Poly::Poly(const Rational& constant) : Poly(empty_ring(), constant) {}

Poly::Poly(long constant) : Poly(empty_ring(), Rational(constant)) {}

Poly Poly::variable(const Variables& vars, std::string_view name) {
  auto ring = make_ring(vars);
  return variable(ring, index_of(*ring, name));
}

Poly Poly::variable(std::shared_ptr<const Variables> ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  Exponents e(ring->size(), 0);
  e[index] = 1;
  return monomial(std::move(ring), std::move(e), Rational(1));
}

Poly Poly::monomial(std::shared_ptr<const Variables> ring, Exponents exps, const Rational& coeff) {
  TermMap t;
  if (coeff != 0) t.emplace(std::move(exps), coeff);
  return Poly(std::move(ring), std::move(t));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exps_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Poly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
  return terms_.empty() ? -1 : exps_degree(terms_.rbegin()->first);
}

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return exps_degree(terms_.begin()->first) == exps_degree(terms_.rbegin()->first);
}

bool Poly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first.at(var) > 0; });
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.rbegin()->second;
}

Poly Poly::in_ring(std::shared_ptr<const Variables> vars) const {
  if (*vars == *ring_) return Poly(std::move(vars), terms_);
  std::vector<std::size_t> map(ring_->size());
  std::vector<bool> used(ring_->size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  for (std::size_t i = 0; i < ring_->size(); ++i) {
    auto it = std::find(vars->begin(), vars->end(), (*ring_)[i]);
    if (it == vars->end()) {
      if (used[i]) throw std::invalid_argument("variable " + (*ring_)[i] + " missing from target ring");
      map[i] = vars->size();
    } else {
      map[i] = static_cast<std::size_t>(it - vars->begin());
    }
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) ne[map[i]] = e[i];
    }
    add_term(out, ne, c);
  }
  return Poly(std::move(vars), std::move(out));
}

Poly Poly::in_ring(const Variables& vars) const { return in_ring(make_ring(vars)); }

void Poly::promote_to(const std::shared_ptr<const Variables>& ring) {
  TermMap out;
  for (const auto& [e, c] : terms_) out.emplace(Exponents(ring->size(), 0), c);
  ring_ = ring;
  terms_ = std::move(out);
}

void Poly::align_with(Poly& other) {
  if (ring_ == other.ring_) return;
  if (*ring_ == *other.ring_) {
    other.ring_ = ring_;
    return;
  }
  if (ring_->empty()) {
    promote_to(other.ring_);
    return;
  }
  if (other.ring_->empty()) {
    other.promote_to(ring_);
    return;
  }
  throw std::invalid_argument("polynomial ring mismatch");
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  Poly rhs = other;
  align_with(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(terms_, e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  Poly rhs = other;
  align_with(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(terms_, e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly lhs = a;
  Poly rhs = b;
  lhs.align_with(rhs);
  Poly::TermMap out;
  const std::size_t n = lhs.ring_->size();
  Exponents e(n);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      add_term(out, e, ca * cb);
    }
  }
  return Poly(lhs.ring_, std::move(out));
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Poly& Poly::operator/=(const Rational& scalar) {
  if (scalar == 0) throw std::domain_error("division of polynomial by zero");
  for (auto& [e, c] : terms_) c /= scalar;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) return a.terms_ == b.terms_;
  if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
  return false;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(ring_, Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
  std::vector<Poly> images = ring_variables(ring_);
  images.at(var) = value.in_ring(ring_);
  return compose(*this, images);
}

Poly Poly::derivative(std::size_t var) const {
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents ne = e;
    ne[var] -= 1;
    add_term(out, ne, c * e[var]);
  }
  return Poly(ring_, std::move(out));
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  const int d = degree_in(var);
  std::vector<TermMap> parts(static_cast<std::size_t>(std::max(d, -1) + 1));
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ne[var] = 0;
    add_term(parts[static_cast<std::size_t>(e[var])], ne, c);
  }
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.emplace_back(ring_, std::move(p));
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = exps_degree(e) == 0;
    if (mag != 1 || unit) {
      os << fano10::to_string(mag);
      if (!unit) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << (*ring_)[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

Poly compose(const Poly& f, std::span<const Poly> images) {
  if (images.size() != f.num_variables()) throw std::invalid_argument("compose: wrong number of images");
  std::shared_ptr<const Variables> target;
  for (const auto& img : images) {
    if (img.num_variables() > 0) {
      if (!target) target = img.ring();
      else if (*target != img.variables()) throw std::invalid_argument("compose: images over different rings");
    }
  }
  if (!target) target = make_ring({});
  // Power cache per variable keeps repeated monomials cheap.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Rational(1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i].in_ring(target));
    return cache[static_cast<std::size_t>(k)];
  };
  Poly sum(target, Rational(0));
  for (const auto& [e, c] : f.terms()) {
    Poly term(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) term *= power(i, e[i]);
    }
    sum += term;
  }
  return sum;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly p = f;
  Poly d = g;
  if (!same_ring(p, d)) {
    Poly probe = p + d;  // throws unless rings are compatible
    p = p.in_ring(probe.ring());
    d = d.in_ring(probe.ring());
  }
  const auto ring = p.num_variables() >= d.num_variables() ? p.ring() : d.ring();
  p = p.in_ring(ring);
  d = d.in_ring(ring);
  Poly::TermMap q;
  Poly::TermMap r;
  const Exponents& lead = d.leading_exponents();
  const Rational& lc = d.leading_coefficient();
  while (!p.is_zero()) {
    const Exponents e = p.leading_exponents();
    const Rational c = p.leading_coefficient();
    if (divides(lead, e)) {
      Exponents qe(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) qe[i] = e[i] - lead[i];
      const Rational qc = c / lc;
      add_term(q, qe, qc);
      p -= Poly::monomial(ring, qe, qc) * d;
    } else {
      add_term(r, e, c);
      p -= Poly::monomial(ring, e, c);
    }
  }
  return {Poly(ring, std::move(q)), Poly(ring, std::move(r))};
}

std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Poly divide_exact(const Poly& f, const Poly& g) {
  auto q = try_divide_exact(f, g);
  if (!q) throw std::domain_error("inexact polynomial division: (" + f.to_string() + ") / (" + g.to_string() + ")");
  return *q;
}

Rational rational_content(const Poly& f) {
  if (f.is_zero()) return 0;
  Integer num = 0;
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  return make_rational(num, den);
}

Poly primitive_part(const Poly& f) {
  if (f.is_zero()) return f;
  Poly out = f / rational_content(f);
  if (out.leading_coefficient() < 0) out = -out;
  return out;
}

Poly monic_lex(const Poly& f) {
  if (f.is_zero()) return f;
  const Exponents* best = nullptr;
  for (const auto& [e, c] : f.terms()) {
    if (!best || std::lexicographical_compare(best->begin(), best->end(), e.begin(), e.end())) best = &e;
  }
  return f / f.coefficient(*best);
}

Poly pseudo_remainder(const Poly& f, const Poly& g, std::size_t var) {
  const int dg = g.degree_in(var);
  if (dg < 0) throw std::domain_error("pseudo-remainder by zero");
  const Poly lc = g.coefficients_in(var).back();
  const Poly x = Poly::variable(g.ring(), var);
  Poly r = f.in_ring(g.ring());
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    const int dr = r.degree_in(var);
    const Poly lr = r.coefficients_in(var).back();
    r = lc * r - lr * x.pow(static_cast<unsigned>(dr - dg)) * g;
  }
  return r;
}

namespace {

std::ptrdiff_t main_variable(const Poly& a, const Poly& b) {
  for (std::size_t i = a.num_variables(); i-- > 0;) {
    if (a.involves(i) || b.involves(i)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& f, std::size_t var) {
  Poly g(f.ring(), Rational(0));
  for (const auto& c : f.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) return Poly(f.ring(), Rational(1));
  }
  return g;
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  if (a.is_constant() || b.is_constant()) return Poly(a.ring(), Rational(1));
  const auto x = main_variable(a, b);
  const auto var = static_cast<std::size_t>(x);
  if (!a.involves(var)) return gcd_rec(a, content_in(b, var));
  if (!b.involves(var)) return gcd_rec(content_in(a, var), b);
  const Poly ca = content_in(a, var);
  const Poly cb = content_in(b, var);
  const Poly c = gcd_rec(ca, cb);
  Poly p = primitive_part(divide_exact(a, ca));
  Poly q = primitive_part(divide_exact(b, cb));
  if (p.degree_in(var) < q.degree_in(var)) std::swap(p, q);
  while (true) {
    Poly r = pseudo_remainder(p, q, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) return c;
    p = std::move(q);
    q = primitive_part(divide_exact(r, content_in(r, var)));
  }
  return primitive_part(c * q);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  if (!same_ring(x, y)) {
    Poly probe = x + y;
    x = x.in_ring(probe.ring());
    y = y.in_ring(probe.ring());
  }
  y = y.in_ring(x.num_variables() >= y.num_variables() ? x.ring() : y.ring());
  x = x.in_ring(y.ring());
  if (x.is_zero() && y.is_zero()) return x;
  Poly g = gcd_rec(x, y);
  if (g.is_constant()) return Poly(x.ring(), Rational(1));
  return primitive_part(g);
}

Poly substitute_fraction(const Poly& f, std::size_t var, const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("substitute_fraction: zero denominator");
  const int k = f.degree_in(var);
  if (k <= 0) return f;
  const auto coeffs = f.coefficients_in(var);
  Poly sum(f.ring(), Rational(0));
  const Poly n = num.in_ring(f.ring());
  const Poly d = den.in_ring(f.ring());
  for (int i = 0; i <= k; ++i) {
    const auto& c = coeffs[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    sum += c * n.pow(static_cast<unsigned>(i)) * d.pow(static_cast<unsigned>(k - i));
  }
  return sum;
}

}  // namespace fano10
