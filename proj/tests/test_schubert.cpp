#include <gtest/gtest.h>

#include "fano10/schubert.hpp"
#include "lr_oracle.hpp"

using namespace fano10;
using oracle::lr_coefficient;
using oracle::lr_product;

namespace {

SchubertClass s(std::initializer_list<int> p) { return SchubertClass::sigma(p); }

}  // namespace

TEST(Schubert, BoxHasTenPartitions) {
  EXPECT_EQ(g25().partitions().size(), 10u);
  EXPECT_EQ(g25().box(), (Partition{3, 3}));
  EXPECT_THROW(s({4}), std::domain_error);
  EXPECT_THROW(s({1, 2}), std::domain_error);
}

TEST(Schubert, PieriExamples) {
  EXPECT_EQ(pieri_multiply(s({1}), 1), s({2}) + s({1, 1}));
  EXPECT_TRUE(pieri_multiply(s({2, 2}), 2).is_zero());
  EXPECT_TRUE(pieri_multiply(s({3, 3}), 1).is_zero());
  EXPECT_EQ(pieri_multiply(s({1}), 2, StripKind::column), s({2, 1}));
  EXPECT_EQ(pieri_multiply(s({2}), 2, StripKind::column), s({3, 1}));
  EXPECT_THROW(pieri_multiply(s({1}), 4), std::domain_error);
  EXPECT_THROW(pieri_multiply(s({1}), 3, StripKind::column), std::domain_error);
  EXPECT_THROW(pieri_multiply(s({1}), 0), std::domain_error);
}

TEST(Schubert, ColumnPieriMatchesSigma11) {
  for (const auto& p : g25().partitions()) {
    const auto c = SchubertClass::sigma(g25(), p);
    EXPECT_EQ(pieri_multiply(c, 2, StripKind::column), multiply(c, s({1, 1}))) << partition_key(p);
  }
}

TEST(Schubert, MultiplyExamples) {
  const auto s1 = s({1});
  EXPECT_EQ(power(s1, 6), Integer(5) * s({3, 3}));
  EXPECT_EQ(multiply(s({2}), power(s1, 4)), Integer(3) * s({3, 3}));
  EXPECT_EQ(multiply(s({1, 1}), power(s1, 4)), Integer(2) * s({3, 3}));
}

TEST(Schubert, Sigma1PowerTable) {
  const auto t = sigma1_power_table();
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t[0], SchubertClass::one(g25()));
  EXPECT_EQ(t[1], s({1}));
  EXPECT_EQ(t[2], s({2}) + s({1, 1}));
  EXPECT_EQ(t[3], s({3}) + Integer(2) * s({2, 1}));
  EXPECT_EQ(t[4], Integer(3) * s({3, 1}) + Integer(2) * s({2, 2}));
  EXPECT_EQ(t[5], Integer(5) * s({3, 2}));
  EXPECT_EQ(t[6], Integer(5) * s({3, 3}));
}

TEST(Schubert, DegreePairing) {
  EXPECT_EQ(degree_pairing(Integer(5) * s({3, 3})), 5);
  const auto s1 = s({1});
  EXPECT_EQ(degree_pairing(Integer(2) * power(s1, 6)), 10);
  EXPECT_EQ(degree_pairing(Integer(2) * multiply(s({2}), power(s1, 4))), 6);
  EXPECT_THROW(degree_pairing(s({3, 2})), std::domain_error);
}

TEST(Schubert, CycleDegreeReport) {
  const auto r = cycle_degree_report();
  ASSERT_EQ(r.size(), 5u);
  const std::vector<long> expected{5, 5, 10, 6, 4};
  for (std::size_t i = 0; i < r.size(); ++i) EXPECT_EQ(r[i].degree, expected[i]) << r[i].name;
}

TEST(Schubert, PoincareDuality) {
  const auto spec = g25();
  for (const auto& a : spec.partitions()) {
    for (const auto& b : spec.partitions()) {
      int sa = 0, sb = 0;
      for (int v : a) sa += v;
      for (int v : b) sb += v;
      if (sa + sb != spec.top_degree()) continue;
      const bool dual = b[0] == spec.width() - a[1] && b[1] == spec.width() - a[0];
      EXPECT_EQ(degree_pairing(multiply(SchubertClass::sigma(spec, a), SchubertClass::sigma(spec, b))), dual ? 1 : 0);
    }
  }
}

TEST(Schubert, CommutativeAndAssociative) {
  const auto spec = g25();
  const auto ps = spec.partitions();
  for (const auto& a : ps) {
    const auto ca = SchubertClass::sigma(spec, a);
    for (const auto& b : ps) {
      const auto cb = SchubertClass::sigma(spec, b);
      EXPECT_EQ(multiply(ca, cb), multiply(cb, ca));
      for (const auto& c : ps) {
        const auto cc = SchubertClass::sigma(spec, c);
        EXPECT_EQ(multiply(multiply(ca, cb), cc), multiply(ca, multiply(cb, cc)));
      }
    }
  }
}

TEST(Schubert, MatchesLittlewoodRichardsonOnG25) {
  const auto spec = g25();
  int pairs = 0;
  for (const auto& a : spec.partitions()) {
    for (const auto& b : spec.partitions()) {
      EXPECT_EQ(multiply(SchubertClass::sigma(spec, a), SchubertClass::sigma(spec, b)), lr_product(spec, a, b))
          << partition_key(a) << " * " << partition_key(b);
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 100);
}

TEST(Schubert, MatchesLittlewoodRichardsonOtherGrassmannians) {
  for (const GrassmannRingSpec spec : {GrassmannRingSpec{2, 5}, GrassmannRingSpec{2, 6}, GrassmannRingSpec{0, 3},
                                       GrassmannRingSpec{3, 5}}) {
    for (const auto& a : spec.partitions()) {
      for (const auto& b : spec.partitions()) {
        EXPECT_EQ(multiply(SchubertClass::sigma(spec, a), SchubertClass::sigma(spec, b)), lr_product(spec, a, b))
            << spec.k << "," << spec.n << ": " << partition_key(a) << " * " << partition_key(b);
      }
    }
  }
}

TEST(Schubert, JsonRoundTrip) {
  const auto c = power(s({1}), 4);
  const Json j = schubert_to_json(c);
  EXPECT_EQ(j["terms"]["3,1"], "3");
  EXPECT_EQ(schubert_from_json(j), c);
  EXPECT_THROW(schubert_from_json(Json{{"terms", {{"x", "1"}}}}), std::invalid_argument);
}
