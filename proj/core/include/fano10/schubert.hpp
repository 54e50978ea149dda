#pragma once

#include <map>
#include <string>
#include <vector>

#include "fano10/rational.hpp"
#include "fano10/serialize.hpp"

namespace fano10 {

using Partition = std::vector<int>;

/// Cohomology ring of G(k+1, n+1): partitions with k+1 parts bounded by n-k.
struct GrassmannRingSpec {
  int k = 1;
  int n = 4;

  int rows() const { return k + 1; }
  int width() const { return n - k; }
  int top_degree() const { return rows() * width(); }
  bool contains(const Partition& p) const;
  /// Weakly decreasing, zero-padded to rows() parts; throws std::domain_error
  /// for negative parts, too many parts or parts wider than the box.
  Partition canonical(Partition p) const;
  Partition box() const;
  /// All partitions in the box, grlex ascending by size then reverse lex.
  std::vector<Partition> partitions() const;
  friend bool operator==(const GrassmannRingSpec&, const GrassmannRingSpec&) = default;
};

GrassmannRingSpec g25();

class SchubertClass {
 public:
  explicit SchubertClass(GrassmannRingSpec spec = g25());
  /// sigma_p with coefficient c.
  static SchubertClass sigma(const GrassmannRingSpec& spec, Partition p, const Integer& c = 1);
  static SchubertClass one(const GrassmannRingSpec& spec);
  static SchubertClass sigma(std::initializer_list<int> p) { return sigma(g25(), Partition(p)); }

  const GrassmannRingSpec& spec() const { return spec_; }
  const std::map<Partition, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Partition& p) const;
  /// True if every term has the same size.
  bool is_homogeneous() const;

  SchubertClass& add(const Partition& p, const Integer& c);
  SchubertClass& operator+=(const SchubertClass& other);
  friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
  friend SchubertClass operator*(const Integer& c, SchubertClass a);
  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

  /// e.g. "3*s[3,1] + 2*s[2,2]"; "0" for the zero class.
  std::string to_string() const;

 private:
  GrassmannRingSpec spec_;
  std::map<Partition, Integer> terms_;
};

enum class StripKind { row, column };

/// Multiplication by sigma_a (row) or sigma_{1^a} (column). Throws
/// std::domain_error unless 1 <= a <= width (row) or rows (column).
SchubertClass pieri_multiply(const SchubertClass& c, int a, StripKind kind = StripKind::row);

/// Product via the Jacobi-Trudi expansion of each term of c2 into special
/// classes followed by iterated row Pieri.
SchubertClass multiply(const SchubertClass& c1, const SchubertClass& c2);
SchubertClass power(const SchubertClass& c, unsigned m);

/// Coefficient of the box class. Throws std::domain_error unless every term
/// has top degree.
Integer degree_pairing(const SchubertClass& c);

struct CycleDegree {
  std::string name;
  std::string formula;
  Integer degree;
};

/// Degrees of G(2,5), W, X and the two Schubert slices of X.
std::vector<CycleDegree> cycle_degree_report();

/// sigma_1^m for m = 0..top_degree.
std::vector<SchubertClass> sigma1_power_table(const GrassmannRingSpec& spec = g25());

std::string partition_key(const Partition& p);
/// {"k": k, "n": n, "terms": {"3,1": "3", ...}} with keys in map order.
Json schubert_to_json(const SchubertClass& c);
SchubertClass schubert_from_json(const Json& j);

}  // namespace fano10
