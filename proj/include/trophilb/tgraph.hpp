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

#ifndef TROPHILB_TGRAPH_HPP_
#define TROPHILB_TGRAPH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "trophilb/graded_ideal.hpp"
#include "trophilb/matroid.hpp"
#include "trophilb/necklace.hpp"

namespace trophilb {

/// The basis picked greedily from the bottom of `order`: an element joins
/// when it is not spanned by the smaller ones. This is the coloop set of the
/// initial matroid for the reversed order.
Subset greedy_basis(const Matroid& m, const Order& order);

struct ConvexHullResult {
  Subset basis_low = 0;   // greedy_basis(M, order)
  Subset basis_high = 0;  // greedy_basis(M, reversed(order))
  std::vector<int> lhs;   // per element, indexed by ground index
  std::vector<int> rhs;
  Subset satisfying = 0;  // elements with lhs <= rhs
  Subset loops = 0;
  Subset coloops = 0;
  /// Every satisfying element is a loop or a coloop.
  bool consistent() const { return (satisfying & ~(loops | coloops)) == 0; }
};

/// Evaluates, for each m, |B_low meet (<=m)| - |B_high meet (<=m)| against
/// |B_low meet (>=m)| - |B_high meet (>=m)| and compares the satisfying set
/// with the loops and coloops computed directly.
ConvexHullResult convex_hull_classify(const Matroid& m, const Order& order);

/// Monomial generators -> all monomials of degree d in the ideal they generate.
std::vector<Monomial> monomial_ideal_degree(const std::vector<Monomial>& gens, int d);

enum class Verdict { kHolds, kViolated, kNotApplicable };
std::string to_string(Verdict v);

/// I = (f) + N. When |U| exceeds h_(f)(d) - h_I(d) and U lies in N_d, (f) must
/// lie in D(U).
Verdict constraint_preserved_check(const HomogPoly& f, const std::vector<Monomial>& n, int d,
                                   const std::vector<Monomial>& u);

/// Minimal generators, sorted by decreasing x-exponent.
std::vector<Monomial> minimal_generators(std::vector<Monomial> gens);
/// Hilbert function of R / (gens) in degrees 0..max_degree.
std::vector<int> monomial_hilbert_function(const std::vector<Monomial>& gens, int max_degree);

struct EdgePoint {
  std::optional<Necklace> necklace;
  GradedIdeal ideal;
  std::vector<int> hilbert;
  std::vector<int> expected_hilbert;
  std::vector<Monomial> init_x_above;  // initial ideal for x > y
  std::vector<Monomial> init_x_below;  // initial ideal for x < y
  std::vector<Monomial> expected_x_above;
  std::vector<Monomial> expected_x_below;
  int colength = 0;
  int expected_colength = 0;
  Verdict constraint = Verdict::kNotApplicable;

  bool hilbert_ok() const { return hilbert == expected_hilbert; }
  bool initial_ok() const { return init_x_above == expected_x_above && init_x_below == expected_x_below; }
  bool colength_ok() const { return colength == expected_colength; }
  bool verified() const { return hilbert_ok() && initial_ok() && colength_ok() && constraint == Verdict::kHolds; }
};

/// Builds (f) + (x^d0, y^d0) [+ all monomials of degree d1] and checks its
/// Hilbert function, both initial ideals and colength against the two
/// rectangles (x^k, y^d0) and (x^d0, y^k), cut off in degree d1 if given.
EdgePoint verify_edge_point(const HomogPoly& f, int d0, std::optional<int> d1 = std::nullopt);

/// One verified EdgePoint per necklace in N_{d0,k}.
std::vector<EdgePoint> rectangle_edge_points(int k, int d0, std::optional<int> d1 = std::nullopt);

/// Groups the ideals (by index) with identical circuits in every degree up
/// to max_degree. Groups are listed in order of first appearance. Throws
/// std::invalid_argument when the Hilbert functions differ.
std::vector<std::vector<std::size_t>> stratum_probe(const std::vector<GradedIdeal>& ideals, int max_degree);

}  // namespace trophilb

#endif  // TROPHILB_TGRAPH_HPP_
