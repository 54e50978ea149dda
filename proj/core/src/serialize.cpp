#include "fano10/serialize.hpp"

#include <stdexcept>

namespace fano10 {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw std::invalid_argument("expected a rational (string or integer), got " + j.dump());
}

Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, rational_to_json(c)}));
  return Json{{"variables", p.variables()}, {"order", "grlex"}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("terms")) {
    throw std::invalid_argument("polynomial JSON needs 'variables' and 'terms'");
  }
  if (j.contains("order") && j.at("order") != "grlex") {
    throw std::invalid_argument("unsupported monomial order " + j.at("order").dump());
  }
  auto ring = make_ring(j.at("variables").get<Variables>());
  Poly::TermMap terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("polynomial term must be [exponents, coefficient]");
    auto e = t.at(0).get<Exponents>();
    if (e.size() != ring->size()) throw std::invalid_argument("exponent vector length mismatch");
    for (int k : e) {
      if (k < 0) throw std::invalid_argument("negative exponent");
    }
    Rational c = rational_from_json(t.at(1));
    if (c == 0) continue;
    auto [it, inserted] = terms.emplace(std::move(e), c);
    if (!inserted) throw std::invalid_argument("duplicate monomial in polynomial JSON");
  }
  return Poly(ring, std::move(terms));
}

Json matrix_to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Json t = Json::array();
      for (const auto& [e, coeff] : m(r, c).terms()) t.push_back(Json::array({e, rational_to_json(coeff)}));
      entries.push_back(std::move(t));
    }
  }
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"variables", *m.ring()},
              {"order", "grlex"},
              {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto vars = j.at("variables").get<Variables>();
  const auto& entries = j.at("entries");
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix JSON entry count mismatch");
  auto ring = make_ring(vars);
  PolyMatrix m(rows, cols, ring);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Json p{{"variables", vars}, {"order", "grlex"}, {"terms", entries[i]}};
    m(i / cols, i % cols) = poly_from_json(p).in_ring(ring);
  }
  return m;
}

Json rational_vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a nested array of rationals");
  RationalMatrix m;
  for (const auto& row : j) m.push_back(rational_vector_from_json(row));
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw std::invalid_argument("ragged rational matrix");
  }
  return m;
}

}  // namespace fano10
