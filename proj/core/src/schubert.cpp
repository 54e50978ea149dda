#include "fano10/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fano10 {

namespace {

int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

void strips(const GrassmannRingSpec& spec, const Partition& base, Partition& cur, std::size_t row, int left,
            StripKind kind, std::vector<Partition>& out) {
  if (row == cur.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  // Horizontal strip: row r may grow up to the old length of row r-1.
  // Vertical strip: each row grows by at most one box.
  const int cap_prev = row == 0 ? spec.width() : (kind == StripKind::row ? base[row - 1] : cur[row - 1]);
  const int max_add = kind == StripKind::row ? std::min(left, cap_prev - base[row]) : std::min({left, 1, cap_prev - base[row]});
  for (int add = 0; add <= max_add; ++add) {
    cur[row] = base[row] + add;
    strips(spec, base, cur, row + 1, left - add, kind, out);
  }
  cur[row] = base[row];
}

}  // namespace

bool GrassmannRingSpec::contains(const Partition& p) const {
  if (static_cast<int>(p.size()) != rows()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] > width()) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

Partition GrassmannRingSpec::canonical(Partition p) const {
  while (!p.empty() && p.back() == 0 && static_cast<int>(p.size()) > rows()) p.pop_back();
  if (static_cast<int>(p.size()) > rows()) throw std::domain_error("partition has more than " + std::to_string(rows()) + " parts");
  p.resize(static_cast<std::size_t>(rows()), 0);
  if (!contains(p)) throw std::domain_error("partition " + partition_key(p) + " is not in the box");
  return p;
}

Partition GrassmannRingSpec::box() const { return Partition(static_cast<std::size_t>(rows()), width()); }

std::vector<Partition> GrassmannRingSpec::partitions() const {
  std::vector<Partition> out;
  for (int d = 0; d <= top_degree(); ++d) {
    std::vector<Partition> level;
    std::vector<int> p(static_cast<std::size_t>(rows()), 0);
    auto rec = [&](auto&& self, std::size_t i, int left, int cap) -> void {
      if (i == p.size()) {
        if (left == 0) level.push_back(p);
        return;
      }
      for (int v = std::min(left, cap); v >= 0; --v) {
        p[i] = v;
        self(self, i + 1, left - v, v);
      }
      p[i] = 0;
    };
    rec(rec, 0, d, width());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

GrassmannRingSpec g25() { return GrassmannRingSpec{1, 4}; }

SchubertClass::SchubertClass(GrassmannRingSpec spec) : spec_(spec) {
  if (spec.k < 0 || spec.n < spec.k) throw std::invalid_argument("need 0 <= k <= n");
}

SchubertClass SchubertClass::sigma(const GrassmannRingSpec& spec, Partition p, const Integer& c) {
  SchubertClass out(spec);
  out.add(spec.canonical(std::move(p)), c);
  return out;
}

SchubertClass SchubertClass::one(const GrassmannRingSpec& spec) { return sigma(spec, Partition{}); }

Integer SchubertClass::coefficient(const Partition& p) const {
  const auto it = terms_.find(spec_.canonical(p));
  return it == terms_.end() ? Integer(0) : it->second;
}

bool SchubertClass::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = size_of(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return size_of(t.first) == d; });
}

SchubertClass& SchubertClass::add(const Partition& p, const Integer& c) {
  if (c == 0) return *this;
  Integer& slot = terms_[spec_.canonical(p)];
  slot += c;
  if (slot == 0) terms_.erase(spec_.canonical(p));
  return *this;
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& other) {
  if (!(spec_ == other.spec_)) throw std::invalid_argument("Schubert classes of different Grassmannians");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

SchubertClass operator*(const Integer& c, SchubertClass a) {
  if (c == 0) return SchubertClass(a.spec_);
  for (auto& [p, v] : a.terms_) v *= c;
  return a;
}

std::string SchubertClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [p, c] = *it;
    Integer mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (mag != 1) os << mag.get_str() << "*";
    os << "s[" << partition_key(p) << "]";
    first = false;
  }
  return os.str();
}

SchubertClass pieri_multiply(const SchubertClass& c, int a, StripKind kind) {
  const auto& spec = c.spec();
  const int bound = kind == StripKind::row ? spec.width() : spec.rows();
  if (a < 1 || a > bound) {
    throw std::domain_error("Pieri index " + std::to_string(a) + " outside [1, " + std::to_string(bound) + "]");
  }
  SchubertClass out(spec);
  for (const auto& [p, coeff] : c.terms()) {
    Partition cur = p;
    std::vector<Partition> shapes;
    strips(spec, p, cur, 0, a, kind, shapes);
    for (const auto& s : shapes) out.add(s, coeff);
  }
  return out;
}

namespace {

SchubertClass times_special(const SchubertClass& c, int a) {
  if (a < 0 || a > c.spec().width()) return SchubertClass(c.spec());
  if (a == 0) return c;
  return pieri_multiply(c, a, StripKind::row);
}

}  // namespace

SchubertClass multiply(const SchubertClass& c1, const SchubertClass& c2) {
  if (!(c1.spec() == c2.spec())) throw std::invalid_argument("Schubert classes of different Grassmannians");
  const auto& spec = c1.spec();
  SchubertClass out(spec);
  const auto r = static_cast<std::size_t>(spec.rows());
  for (const auto& [lambda, coeff] : c2.terms()) {
    // sigma_lambda = det[sigma_{lambda_i + j - i}].
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int sign = 1;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
          if (perm[i] > perm[j]) sign = -sign;
        }
      }
      SchubertClass term = c1;
      for (std::size_t i = 0; i < r && !term.is_zero(); ++i) {
        term = times_special(term, lambda[i] + static_cast<int>(perm[i]) - static_cast<int>(i));
      }
      out += Integer(sign) * coeff * term;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

SchubertClass power(const SchubertClass& c, unsigned m) {
  SchubertClass out = SchubertClass::one(c.spec());
  for (unsigned i = 0; i < m; ++i) out = multiply(out, c);
  return out;
}

Integer degree_pairing(const SchubertClass& c) {
  const auto& spec = c.spec();
  for (const auto& [p, coeff] : c.terms()) {
    if (size_of(p) != spec.top_degree()) {
      throw std::domain_error("degree_pairing needs a class of codimension " + std::to_string(spec.top_degree()) +
                              ", got term s[" + partition_key(p) + "]");
    }
  }
  return c.coefficient(spec.box());
}

std::vector<CycleDegree> cycle_degree_report() {
  const auto s1 = SchubertClass::sigma({1});
  const auto s2 = SchubertClass::sigma({2});
  const auto s11 = SchubertClass::sigma({1, 1});
  const auto x = Integer(2) * power(s1, 3);
  return {
      {"G(2,5)", "s1^6", degree_pairing(power(s1, 6))},
      {"W", "s1^2 . s1^4", degree_pairing(multiply(power(s1, 2), power(s1, 4)))},
      {"X", "2 s1^3 . s1^3", degree_pairing(multiply(x, power(s1, 3)))},
      {"s20 . X . H", "2 s1^3 . s2 . s1", degree_pairing(multiply(multiply(x, s2), s1))},
      {"s11 . X . H", "2 s1^3 . s11 . s1", degree_pairing(multiply(multiply(x, s11), s1))},
  };
}

std::vector<SchubertClass> sigma1_power_table(const GrassmannRingSpec& spec) {
  std::vector<SchubertClass> out{SchubertClass::one(spec)};
  for (int m = 1; m <= spec.top_degree(); ++m) out.push_back(pieri_multiply(out.back(), 1));
  return out;
}

std::string partition_key(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

Json schubert_to_json(const SchubertClass& c) {
  Json terms = Json::object();
  for (const auto& [p, coeff] : c.terms()) terms[partition_key(p)] = coeff.get_str();
  return Json{{"k", c.spec().k}, {"n", c.spec().n}, {"terms", terms}};
}

SchubertClass schubert_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) throw std::invalid_argument("Schubert class needs a terms object");
  GrassmannRingSpec spec{j.value("k", 1), j.value("n", 4)};
  SchubertClass out(spec);
  for (const auto& [key, value] : j.at("terms").items()) {
    Partition p;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        p.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition key '" + key + "'");
      }
    }
    const Rational c = rational_from_json(value);
    if (c.get_den() != 1) throw std::invalid_argument("Schubert coefficients must be integers");
    out.add(p, c.get_num());
  }
  return out;
}

}  // namespace fano10
