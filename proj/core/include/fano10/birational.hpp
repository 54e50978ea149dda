#pragma once

#include <array>
#include <string>
#include <vector>

#include "fano10/rational.hpp"
#include "fano10/report.hpp"
#include "fano10/serialize.hpp"

namespace fano10 {

/// Integer coefficients of a divisor class in the basis of a PicardState.
using DivisorClass = std::vector<Integer>;

class PicardState {
 public:
  /// `triple` lists D_i D_j D_k for i <= j <= k in lexicographic order: one
  /// value for rank 1, four (a^3, a^2 b, a b^2, b^3) for rank 2.
  PicardState(std::vector<std::string> basis, const std::vector<Integer>& triple, DivisorClass canonical);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const DivisorClass& canonical() const { return canonical_; }
  DivisorClass anticanonical() const;
  const std::vector<std::string>& log() const { return log_; }

  Integer triple(std::size_t i, std::size_t j, std::size_t k) const;
  /// Trilinear extension to arbitrary classes.
  Integer product(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) const;
  Integer cube(const DivisorClass& a) const { return product(a, a, a); }
  /// Values in the order of the constructor's `triple` argument.
  std::vector<Integer> table() const;
  DivisorClass basis_class(std::size_t i) const;
  bool is_symmetric() const;

  PicardState with_log(std::string entry) const;
  Json to_json() const;
  std::string to_string() const;

 private:
  std::vector<std::string> basis_;
  std::vector<Integer> tensor_;
  DivisorClass canonical_;
  std::vector<std::string> log_;
};

struct CurveData {
  int genus = 0;
  int H_degree = 1;
  int K_dot_C = -1;
  std::string label;
};

struct FloppedCurve {
  std::string label;
  /// D_i . C for each basis divisor D_i.
  std::vector<Integer> intersections;
  int multiplicity = 1;
};

/// H^3 = 10, K = -H.
PicardState initial_state_X10();
/// Basis (H*, E). Throws UnsupportedOperation for rank-2 input.
PicardState blow_up_curve(const PicardState& s, const CurveData& c);
/// Basis (H*, E) with E^3 = 2. Throws UnsupportedOperation for rank-2 input.
PicardState blow_up_node(const PicardState& s);
/// Row i of `m` expresses new basis element i in the old basis; `names`
/// labels the new basis. Throws BasisError unless m is unimodular.
PicardState change_basis(const PicardState& s, const std::vector<std::vector<Integer>>& m,
                         std::vector<std::string> names);
/// D1 D2 D3 -= sum mult (D1.C)(D2.C)(D3.C). Throws NotAFlopError if some
/// K.C != 0, std::invalid_argument on a length mismatch.
PicardState apply_flop(const PicardState& s, const std::vector<FloppedCurve>& curves);
/// 8 - K^2 M - 2 K M^2.
Integer m_cubed_by_adjunction(const PicardState& s, const DivisorClass& M);

struct Contraction {
  Integer deg_Y;
  Integer deg_center;
};

/// deg_Y = (-K + M)^3 and deg_center = (-K + M).M.(-K).
Contraction contract_ruled_to_curve(const PicardState& s, const DivisorClass& M);

/// h_mult * curve_deg - e_mult * curve_meets_center.
Integer curve_divisor_intersections(int curve_deg, int curve_meets_center, std::array<int, 2> divisor);

ScenarioReport scenario_line_transform();
ScenarioReport scenario_conic_transform();
ScenarioReport scenario_node_projection();

}  // namespace fano10
