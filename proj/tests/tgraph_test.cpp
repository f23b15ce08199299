// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "hilb_samples.hpp"
#include "test_support.hpp"
#include "trophilb/tgraph.hpp"

namespace trophilb {
namespace {

using testing::letters;
using testing::random_matrix;
using testing::uniform_int;

Matroid random_matroid() {
  const int n = uniform_int(1, 7);
  const int rows = uniform_int(0, n);
  return Matroid::from_realization(letters(n), random_matrix(rows, n, uniform_int(0, 3) == 0 ? 3 : 1, 40));
}

Order random_order(int n) {
  Order order = index_order(n);
  std::shuffle(order.begin(), order.end(), testing::rng());
  return order;
}

Subset greedy_oracle(const Matroid& m, const Order& order) {
  Subset b = 0;
  for (int e : order) {
    const Subset next = b | (Subset{1} << e);
    if (m.rank(next) > m.rank(b)) b = next;
  }
  return b;
}

/// Positions in `order` of the members of s, ascending.
std::vector<int> ranks_in(const Order& order, Subset s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    if (contains(s, order[static_cast<std::size_t>(i)])) out.push_back(i);
  }
  return out;
}

std::vector<int> rectangle_profile(int k, int d0) {
  std::vector<int> h;
  for (int d = 0; d <= d0 + k; ++d) h.push_back(std::max(0, std::min({d + 1, k, d0 + k - 1 - d})));
  return h;
}

TEST(GreedyBasis, MatchesDefinitionAndIsGaleMinimal) {
  for (int trial = 0; trial < 100; ++trial) {
    const Matroid m = random_matroid();
    const Order order = random_order(m.size());
    const Subset b = greedy_basis(m, order);
    EXPECT_EQ(b, greedy_oracle(m, order));
    EXPECT_EQ(subset_size(b), m.rank());
    EXPECT_EQ(m.rank(b), m.rank());
    EXPECT_EQ(b & m.loops(), Subset{0});
    EXPECT_EQ(m.coloops() & ~b, Subset{0});
    const auto mine = ranks_in(order, b);
    for (Subset s = 0; s <= full_subset(m.size()); ++s) {
      if (subset_size(s) != m.rank() || m.rank(s) != m.rank()) continue;
      const auto other = ranks_in(order, s);
      for (std::size_t i = 0; i < mine.size(); ++i) EXPECT_LE(mine[i], other[i]);
    }
  }
}

TEST(ConvexHull, DiscreteMatroid) {
  const Matroid m = Matroid::from_realization(letters(4), ExactMatrix::Identity(4, 4));
  const ConvexHullResult r = convex_hull_classify(m, index_order(4));
  EXPECT_EQ(r.satisfying, full_subset(4));
  EXPECT_EQ(r.coloops, full_subset(4));
  EXPECT_TRUE(r.consistent());
}

TEST(ConvexHull, UniformMatroidHasNoSatisfyingElement) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const Matroid m = uniform(k, letters(n));
      const Order order = random_order(n);
      const ConvexHullResult r = convex_hull_classify(m, order);
      Subset low = 0;
      Subset high = 0;
      for (int i = 0; i < k; ++i) {
        low |= Subset{1} << order[static_cast<std::size_t>(i)];
        high |= Subset{1} << order[static_cast<std::size_t>(n - 1 - i)];
      }
      EXPECT_EQ(r.basis_low, low);
      EXPECT_EQ(r.basis_high, high);
      EXPECT_EQ(r.satisfying, Subset{0});
    }
  }
}

TEST(ConvexHull, NeverContradictsDirectClassification) {
  for (int trial = 0; trial < 200; ++trial) {
    const Matroid m = random_matroid();
    const ConvexHullResult r = convex_hull_classify(m, random_order(m.size()));
    Subset loops = 0;
    Subset coloops = 0;
    const Subset all = full_subset(m.size());
    for (int e = 0; e < m.size(); ++e) {
      const Subset one = Subset{1} << e;
      if (m.rank(one) == 0) loops |= one;
      if (m.rank(all & ~one) < m.rank()) coloops |= one;
    }
    EXPECT_EQ(r.loops, loops);
    EXPECT_EQ(r.coloops, coloops);
    EXPECT_TRUE(r.consistent());
  }
}

TEST(ConvexHull, ConsecutiveMonomialsOfEdgeIdeals) {
  for (int k : {2, 3}) {
    const int d0 = 6;
    for (const auto& gamma : enumerate_necklaces(d0, k)) {
      const GradedIdeal ideal(
          {necklace_polynomial(gamma), HomogPoly::monomial({d0, 0}), HomogPoly::monomial({0, d0})});
      for (int d = d0; d <= d0 + k - 1; ++d) {
        for (auto o : {MonomialOrder::kXBelowY, MonomialOrder::kXAboveY}) {
          const ConvexHullResult r = convex_hull_classify(ideal.piece_matroid(d), degree_order(d, o));
          EXPECT_TRUE(r.consistent());
          for (int b = 0; b <= d - d0; ++b) {
            EXPECT_TRUE(contains(r.satisfying, b)) << gamma.bits() << " d=" << d << " b=" << b;
            EXPECT_TRUE(contains(r.loops, b));
          }
        }
      }
    }
  }
}

TEST(MonomialIdeals, GeneratorsAndHilbertFunction) {
  EXPECT_EQ(minimal_generators({{1, 2}, {3, 0}, {3, 1}, {0, 5}, {1, 2}}),
            (std::vector<Monomial>{{3, 0}, {1, 2}, {0, 5}}));
  EXPECT_EQ(monomial_hilbert_function({{2, 0}, {1, 2}, {0, 5}}, 6), (std::vector<int>{1, 2, 2, 1, 1, 0, 0}));
  EXPECT_EQ(monomial_ideal_degree({{2, 0}, {0, 2}}, 3), (std::vector<Monomial>{{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Monomial> gens;
    for (int i = uniform_int(1, 4); i > 0; --i) {
      const int deg = uniform_int(1, 5);
      const int b = uniform_int(0, deg);
      gens.push_back({deg - b, b});
    }
    std::vector<HomogPoly> polys;
    for (const auto& m : gens) polys.push_back(HomogPoly::monomial(m));
    const GradedIdeal ideal(polys);
    const auto h = monomial_hilbert_function(gens, 8);
    for (int d = 0; d <= 8; ++d) {
      EXPECT_EQ(h[static_cast<std::size_t>(d)], ideal.hilbert_function(d));
      EXPECT_EQ(static_cast<int>(monomial_ideal_degree(gens, d).size()), ideal.dim(d));
    }
  }
}

TEST(ConstraintPreserved, EdgeInstance) {
  for (const auto& gamma : enumerate_necklaces(6, 2)) {
    EXPECT_EQ(constraint_preserved_check(necklace_polynomial(gamma), {{6, 0}, {0, 6}}, 6, {{6, 0}, {0, 6}}),
              Verdict::kHolds);
  }
}

TEST(ConstraintPreserved, BelowThresholdIsNotApplicable) {
  const HomogPoly f = parse_homog_poly("x^2-y^2");
  EXPECT_EQ(constraint_preserved_check(f, {{6, 0}, {0, 6}}, 6, {{6, 0}}), Verdict::kNotApplicable);
  EXPECT_EQ(constraint_preserved_check(f, {{6, 0}}, 6, {{0, 6}}), Verdict::kNotApplicable);
  EXPECT_EQ(to_string(Verdict::kNotApplicable), "not applicable");
}

TEST(ConstraintPreserved, RandomInstances) {
  int applicable = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const HomogPoly f = testing::random_homog(uniform_int(1, 3));
    std::vector<Monomial> n;
    for (int i = uniform_int(1, 3); i > 0; --i) {
      const int deg = uniform_int(2, 6);
      const int b = uniform_int(0, deg);
      n.push_back({deg - b, b});
    }
    const int d = uniform_int(f.degree(), 8);
    const auto nd = monomial_ideal_degree(n, d);
    if (nd.empty()) continue;
    std::vector<Monomial> u;
    for (const auto& m : nd) {
      if (uniform_int(0, 1)) u.push_back(m);
    }
    if (u.empty()) u.push_back(nd.front());
    const Verdict v = constraint_preserved_check(f, n, d, u);
    EXPECT_NE(v, Verdict::kViolated);
    if (v == Verdict::kHolds) ++applicable;
  }
  EXPECT_GT(applicable, 5);
}

TEST(EdgePoints, HexagonPairs) {
  const auto points = rectangle_edge_points(2, 6);
  ASSERT_EQ(points.size(), 3u);
  for (const auto& p : points) {
    EXPECT_TRUE(p.verified());
    EXPECT_EQ(p.colength, 12);
    EXPECT_EQ(p.hilbert, rectangle_profile(2, 6));
    EXPECT_EQ(p.expected_x_above, (std::vector<Monomial>{{6, 0}, {0, 2}}));
    EXPECT_EQ(p.expected_x_below, (std::vector<Monomial>{{2, 0}, {0, 6}}));
  }
}

TEST(EdgePoints, SmallCases) {
  const auto one = rectangle_edge_points(1, 2);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].verified());
  EXPECT_EQ(one[0].ideal.dim(1), 1);
  EXPECT_THROW(rectangle_edge_points(3, 3), std::invalid_argument);
  EXPECT_THROW(rectangle_edge_points(2, 17), std::invalid_argument);
}

TEST(EdgePoints, DimensionsOfGradedPieces) {
  for (int d0 = 3; d0 <= 7; ++d0) {
    for (int k = 1; k < d0; ++k) {
      const auto points = rectangle_edge_points(k, d0);
      EXPECT_EQ(static_cast<long>(points.size()), necklace_count(d0, k));
      for (const auto& p : points) {
        EXPECT_TRUE(p.verified()) << p.necklace->bits();
        EXPECT_EQ(p.colength, d0 * k);
        for (int d = k; d <= d0 - 1; ++d) EXPECT_EQ(p.ideal.dim(d), d + 1 - k);
        for (int d = d0; d <= d0 + k - 1; ++d) EXPECT_EQ(p.ideal.dim(d), 2 * d - k - d0 + 2);
      }
    }
  }
}

TEST(EdgePoints, NonNecklacePolynomialsFail) {
  // Roots 1 and 2 do not lie on a common polygon of roots of unity.
  const EdgePoint p = verify_edge_point(parse_homog_poly("(x-y)*(x-2*y)"), 6);
  EXPECT_FALSE(p.initial_ok());
  EXPECT_FALSE(p.verified());
  for (int trial = 0; trial < 20; ++trial) {
    const int a = uniform_int(2, 5);
    // Roots a and b with b/a not a root of unity; a torus rescaling of a
    // necklace would pass.
    const int b = -(a + uniform_int(1, 3));
    const EdgePoint q = verify_edge_point(parse_homog_poly("(x-" + std::to_string(a) + "*y)*(x+" +
                                                           std::to_string(-b) + "*y)"),
                                          6);
    EXPECT_FALSE(q.verified());
  }
}

TEST(EdgePoints, TruncatedRectangle) {
  const auto points = rectangle_edge_points(4, 6, 7);
  EXPECT_EQ(static_cast<long>(points.size()), necklace_count(6, 4));
  for (const auto& p : points) {
    EXPECT_TRUE(p.verified());
    EXPECT_EQ(p.hilbert_ok(), true);
    EXPECT_EQ(p.ideal.hilbert_function(7), 0);
  }
}

TEST(StratumProbe, RedCurveIsOneStratum) {
  std::vector<GradedIdeal> ideals;
  for (int c : {1, 2, 3}) ideals.push_back(GradedIdeal::parse(testing::red_curve_sample(c)));
  const auto groups = stratum_probe(ideals, 8);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0].size(), 3u);
}

TEST(StratumProbe, RedCurveAgainstOpenStratum) {
  const std::vector<GradedIdeal> ideals = {GradedIdeal::parse(testing::red_curve_sample(1)),
                                           GradedIdeal::parse(testing::red_curve_sample(2)),
                                           GradedIdeal::parse(testing::open_stratum_sample(3, 2)),
                                           GradedIdeal::parse(testing::open_stratum_sample(5, 1))};
  const auto groups = stratum_probe(ideals, 8);
  ASSERT_EQ(groups.size(), 2u);
  EXPECT_EQ(groups[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(groups[1], (std::vector<std::size_t>{2, 3}));
}

TEST(StratumProbe, MonomialIdealsAreSingletons) {
  std::vector<GradedIdeal> ideals;
  for (const auto& t : testing::monomial_samples()) ideals.push_back(GradedIdeal::parse(t));
  EXPECT_EQ(stratum_probe(ideals, 8).size(), 4u);
}

TEST(StratumProbe, TenStrata) {
  const auto ideals = testing::strata_samples();
  for (const auto& ideal : ideals) {
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(ideal.hilbert_function(d), (std::vector<int>{1, 2, 2, 1, 1, 0, 0})[d]);
  }
  const auto groups = stratum_probe(ideals, 8);
  EXPECT_EQ(groups.size(), 10u);
}

TEST(StratumProbe, HilbertMismatchThrows) {
  const std::vector<GradedIdeal> ideals = {GradedIdeal::parse(testing::red_curve_sample(1)),
                                           GradedIdeal::parse("x^2; y^2")};
  EXPECT_THROW(stratum_probe(ideals, 6), std::invalid_argument);
}

}  // namespace
}  // namespace trophilb
