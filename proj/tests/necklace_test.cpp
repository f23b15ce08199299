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

#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "test_support.hpp"
#include "trophilb/necklace.hpp"

namespace trophilb {
namespace {

using testing::uniform_int;

/// Rotation orbits of the k-subsets of Z/d, counted by brute force.
long orbit_count(int d, int k) {
  std::set<unsigned> seen;
  long orbits = 0;
  const unsigned full = (1u << d) - 1;
  for (unsigned s = 0; s <= full; ++s) {
    if (std::popcount(s) != k || seen.count(s)) continue;
    ++orbits;
    unsigned r = s;
    for (int i = 0; i < d; ++i) {
      seen.insert(r);
      r = ((r << 1) | (r >> (d - 1))) & full;
    }
  }
  return orbits;
}

int inverse_mod(int a, int d) {
  for (int b = 1; b < d; ++b) {
    if (a * b % d == 1) return b;
  }
  return 1 % d;
}

CycNum determinant_of_positions(int d, const std::vector<int>& p, const std::vector<int>& q) {
  const int k = static_cast<int>(p.size());
  ExactMatrix m(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m(i, j) = zeta_power(static_cast<unsigned>(d), static_cast<long>(p[static_cast<std::size_t>(i)]) *
                                                         q[static_cast<std::size_t>(j)]);
    }
  }
  return determinant(m);
}

std::vector<int> rotate(const std::vector<int>& p, int r, int d) {
  std::vector<int> out;
  for (int v : p) out.push_back((v + r) % d);
  return out;
}

TEST(Necklace, CanonicalForm) {
  EXPECT_EQ(canonical_rotation("110000"), "000011");
  EXPECT_EQ(canonical_rotation("101"), "011");
  const Necklace a = Necklace::parse("110000");
  EXPECT_EQ(a.positions(), (std::vector<int>{0, 1}));
  EXPECT_EQ(a, Necklace(6, {3, 4}));
  EXPECT_EQ(a.canonical(), canonical_rotation(Necklace(6, {2, 3}).bits()));
  EXPECT_EQ(Necklace(6, {7, 6}).positions(), (std::vector<int>{0, 1}));
  EXPECT_THROW(Necklace::parse("10a"), ParseError);
  EXPECT_THROW(Necklace(3, {0, 3}), std::invalid_argument);
}

TEST(Necklace, SmallCounts) {
  EXPECT_EQ(enumerate_necklaces(6, 2).size(), 3u);
  EXPECT_EQ(enumerate_necklaces(8, 4).size(), 10u);
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(enumerate_necklaces(d, d).size(), 1u);
  EXPECT_THROW(enumerate_necklaces(25, 3), std::out_of_range);
  EXPECT_THROW(enumerate_necklaces(4, 5), std::out_of_range);
}

TEST(Necklace, CountsMatchOrbitsAndBurnside) {
  for (int d = 1; d <= 16; ++d) {
    for (int k = 1; k <= d; ++k) {
      const auto all = enumerate_necklaces(d, k);
      const long orbits = orbit_count(d, k);
      EXPECT_EQ(static_cast<long>(all.size()), orbits) << d << " " << k;
      EXPECT_EQ(necklace_count(d, k), orbits) << d << " " << k;
      if (d > 10) continue;
      std::set<std::string> canon;
      for (const auto& gamma : all) {
        EXPECT_EQ(gamma.k(), k);
        EXPECT_EQ(gamma.bits()[0], '1');
        canon.insert(gamma.canonical());
      }
      EXPECT_EQ(canon.size(), all.size());
    }
  }
}

TEST(Skip, PentagonExample) {
  const Necklace adjacent(5, {0, 1});
  const Necklace skipped = skip(adjacent, 3);
  EXPECT_EQ(skipped, Necklace(5, {0, 2}));
  EXPECT_EQ(skip(adjacent, 1), adjacent);
  EXPECT_THROW(skip(Necklace(6, {0, 1}), 2), std::invalid_argument);
}

TEST(Skip, GroupAction) {
  for (int d = 2; d <= 10; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (const auto& gamma : enumerate_necklaces(d, k)) {
        for (int a = 1; a < d; ++a) {
          if (std::gcd(a, d) != 1) continue;
          EXPECT_EQ(skip(skip(gamma, a), inverse_mod(a, d)), gamma);
        }
      }
    }
  }
}

TEST(NecklaceIdeal, Examples) {
  EXPECT_EQ(necklace_polynomial(Necklace(1, {0})), HomogPoly(1, {CycNum(1), CycNum(-1)}));
  EXPECT_EQ(necklace_polynomial(Necklace(6, {0, 3})), HomogPoly(2, {CycNum(1), CycNum(0), CycNum(-1)}));
  const CycNum z = zeta_power(6, 1);
  EXPECT_EQ(necklace_polynomial(Necklace(6, {0, 1})), HomogPoly(2, {CycNum(1), -(CycNum(1) + z), z}));
}

TEST(NecklaceIdeal, PointsAreNegatedRoots) {
  for (const auto& gamma : enumerate_necklaces(6, 3)) {
    EXPECT_EQ(polynomial_of_points(points_of(gamma)), necklace_polynomial(gamma));
  }
}

TEST(NecklaceIdeal, HexagonPairsHaveDistinctTropicalizations) {
  const auto all = enumerate_necklaces(6, 2);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(trop_equal(all[i], all[j], 8));
  }
  const TruncatedTropIdeal t = trop_of(Necklace(6, {0, 3}), 2);
  const auto circuits = t.piece(2).circuit_sets();
  EXPECT_NE(std::find(circuits.begin(), circuits.end(), Subset{0b101}), circuits.end());
}

TEST(NecklaceIdeal, EveryIdealContainsTheBinomial) {
  for (int d = 1; d <= 8; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (const auto& gamma : enumerate_necklaces(d, k)) {
        EXPECT_TRUE(is_dependent_in(ideal_of(gamma), d, {{d, 0}, {0, d}})) << gamma.canonical();
      }
    }
  }
}

TEST(Skip, PreservesTropicalization) {
  for (int d = 2; d <= 8; ++d) {
    for (int k = 1; k < d; ++k) {
      for (const auto& gamma : enumerate_necklaces(d, k)) {
        for (int a = 2; a < d; ++a) {
          if (std::gcd(a, d) == 1) EXPECT_TRUE(trop_equal(gamma, skip(gamma, a), 10)) << gamma.canonical() << " a=" << a;
        }
      }
    }
  }
}

TEST(GcdCriterion, Examples) {
  const Necklace adjacent(6, {0, 1});
  EXPECT_EQ(gcd_alpha(adjacent), 1);
  for (int dp = 2; dp <= 13; ++dp) EXPECT_EQ(power_pair_dependent(adjacent, dp), dp % 6 == 0);
  const Necklace antipodal(6, {0, 3});
  EXPECT_EQ(gcd_alpha(antipodal), 3);
  EXPECT_TRUE(power_pair_dependent(antipodal, 2));
  EXPECT_EQ(gcd_alpha(Necklace(5, {0, 1, 2, 3, 4})), 1);
}

TEST(GcdCriterion, AgreesWithDirectDependence) {
  for (int d = 1; d <= 8; ++d) {
    for (int k = 1; k <= d; ++k) {
      for (const auto& gamma : enumerate_necklaces(d, k)) {
        const GradedIdeal ideal = ideal_of(gamma);
        for (int dp = k; dp <= 2 * d; ++dp) {
          EXPECT_EQ(power_pair_dependent(gamma, dp), is_dependent_in(ideal, dp, {{dp, 0}, {0, dp}}))
              << gamma.canonical() << " d'=" << dp;
        }
      }
    }
  }
}

TEST(Determinant, Examples) {
  EXPECT_FALSE(necklace_determinant(Necklace(5, {0}), Necklace(5, {0})).is_zero());
  EXPECT_TRUE(necklace_determinant(Necklace(4, {0, 2}), Necklace(4, {0, 2})).is_zero());
  EXPECT_EQ(determinant_of_positions(4, {0, 1}, {0, 1}), zeta_power(4, 1) - CycNum(1));
  EXPECT_FALSE(necklace_determinant(Necklace(4, {0, 1}), Necklace(4, {0, 1})).is_zero());
}

TEST(Determinant, VanishingIsRotationInvariant) {
  for (int d = 2; d <= 8; ++d) {
    for (int k = 1; k <= std::min(d, 4); ++k) {
      const auto all = enumerate_necklaces(d, k);
      for (const auto& a : all) {
        for (const auto& b : all) {
          const bool zero = necklace_determinant(a, b).is_zero();
          const int r = uniform_int(0, d - 1);
          const int s = uniform_int(0, d - 1);
          EXPECT_EQ(determinant_of_positions(d, rotate(a.positions(), r, d), rotate(b.positions(), s, d)).is_zero(),
                    zero);
        }
      }
    }
  }
}

TEST(Eta, Examples) {
  const EtaResult r = eta(6, 3, Partition());
  ASSERT_FALSE(r.collision);
  EXPECT_EQ(r.exponents, (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(r.necklace, Necklace(6, {0, 1, 2}));
  const EtaResult shifted = eta(6, 3, Partition(), true);
  EXPECT_EQ(shifted.exponents, (std::vector<int>{1, 0, 5}));
  EXPECT_EQ(eta(5, 1, Partition({5})).necklace, Necklace(5, {0}));
}

TEST(Eta, CollisionFoundBySearch) {
  bool found = false;
  for (int d = 2; d <= 6 && !found; ++d) {
    for (int k = 2; k <= d && !found; ++k) {
      for (const auto& lambda : partitions_in_box(k, d)) {
        const EtaResult r = eta(d, k, lambda);
        std::set<int> distinct(r.exponents.begin(), r.exponents.end());
        EXPECT_EQ(r.collision, static_cast<int>(distinct.size()) < k);
        if (r.collision) {
          found = true;
          // Two equal columns in the bialternant numerator.
          std::vector<std::pair<CycNum, CycNum>> pairs;
          for (int p = 0; p < k; ++p) pairs.emplace_back(zeta_power(static_cast<unsigned>(d), p), CycNum(1));
          EXPECT_TRUE(schur_eval_jacobi_trudi(lambda, PointConfig{pairs}).is_zero());
          break;
        }
      }
    }
  }
  EXPECT_TRUE(found);
}

TEST(Commutativity, DiagonalIsTrivial) {
  const CommutativityResult r = commutativity_check(6, Partition({2, 1}), Partition({2, 1}), 3, 2);
  EXPECT_TRUE(r.holds());
  if (r.applicable) EXPECT_EQ(r.lhs, r.rhs);
}

TEST(Commutativity, RandomTriples) {
  int applicable = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = uniform_int(3, 8);
    const int k = uniform_int(1, std::min(3, d - 1));
    const int g = uniform_int(1, 4);
    const auto box = partitions_in_box(k, g);
    const Partition a = box[static_cast<std::size_t>(uniform_int(0, static_cast<int>(box.size()) - 1))];
    const Partition b = box[static_cast<std::size_t>(uniform_int(0, static_cast<int>(box.size()) - 1))];
    const CommutativityResult r = commutativity_check(d, a, b, g, k);
    EXPECT_TRUE(r.holds()) << d << " " << a.to_string() << " " << b.to_string() << " " << r.note;
    if (r.applicable) {
      ++applicable;
    } else {
      EXPECT_FALSE(r.note.empty());
    }
  }
  EXPECT_GT(applicable, 10);
}

TEST(Converse, InjectedDuplicateIsReported) {
  const auto all = enumerate_necklaces(6, 2);
  std::vector<TruncatedTropIdeal> trops;
  for (const auto& gamma : all) trops.push_back(trop_of(gamma, 6));
  EXPECT_TRUE(find_converse_pairs(all, trops).empty());
  trops[1] = trops[0];
  const auto pairs = find_converse_pairs(all, trops);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].first, all[0]);
  EXPECT_EQ(pairs[0].second, all[1]);
}

TEST(Converse, SkipRelatedPairsAreNotReported) {
  // In N_{5,2} the two necklaces are related by a = 2 and share a tropicalization.
  const auto all = enumerate_necklaces(5, 2);
  ASSERT_EQ(all.size(), 2u);
  EXPECT_TRUE(trop_equal(all[0], all[1], 8));
  EXPECT_TRUE(converse_skip_search(5, 2, 8).empty());
}

TEST(Converse, HexagonAndOctagonCasesAreEmpty) {
  EXPECT_TRUE(converse_skip_search(6, 2, 10).empty());
  EXPECT_TRUE(converse_skip_search(8, 4, 12).empty());
}

TEST(Converse, SevenBeadsHaveUnrelatedEqualPairs) {
  // Units mod 7 give only two orbits on N_{7,3}, but all five necklaces share
  // one tropicalization.
  const auto pairs = converse_skip_search(7, 3, 10);
  bool found = false;
  for (const auto& p : pairs) {
    found = found || (p.first.canonical() == "0000111" && p.second.canonical() == "0001101") ||
            (p.first.canonical() == "0001101" && p.second.canonical() == "0000111");
    EXPECT_TRUE(trop_equal(p.first, p.second, 10));
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace trophilb
