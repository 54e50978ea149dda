#include "fano10/rational.hpp"

#include <stdexcept>

namespace fano10 {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("bad rational literal: " + part);
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("bad rational literal: " + part);
    }
    return Integer(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool is_rational_square(const Rational& value) {
  if (value < 0) return false;
  return mpz_perfect_square_p(value.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(value.get_den_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& value) {
  if (!is_rational_square(value)) throw std::domain_error("not a rational square: " + to_string(value));
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
  return make_rational(n, d);
}

}  // namespace fano10
