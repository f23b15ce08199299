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

#ifndef TROPHILB_GRADED_IDEAL_HPP_
#define TROPHILB_GRADED_IDEAL_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "trophilb/linalg.hpp"
#include "trophilb/matroid.hpp"
#include "trophilb/polynomial.hpp"

namespace trophilb {

/// Labels of Mon_d in index order (increasing y-exponent).
std::vector<std::string> degree_labels(int d);
Subset subset_of(const std::vector<Monomial>& monomials);
std::vector<Monomial> monomials_of(int d, Subset s);

/// The two monomial orders on each Mon_d. kXBelowY ("x<y") makes x^d the
/// smallest element, which is the index order; kXAboveY ("x>y") reverses it.
enum class MonomialOrder { kXBelowY, kXAboveY };
Order degree_order(int d, MonomialOrder order);
MonomialOrder parse_monomial_order(std::string_view text);  // "x<y", "x>y", "y>x", "y<x"

/// Homogeneous ideal of k[x,y] given by generators. Graded pieces and their
/// matroids are memoized behind a mutex; copies share the cache.
class GradedIdeal {
 public:
  GradedIdeal();
  explicit GradedIdeal(std::vector<HomogPoly> generators);
  /// Generators separated by ';'. The coefficient field is the smallest
  /// Q(zeta_d) containing every token.
  static GradedIdeal parse(std::string_view text);

  const std::vector<HomogPoly>& generators() const { return generators_; }
  int max_generator_degree() const;
  int default_max_degree() const { return 2 * max_generator_degree() + 2; }
  unsigned order() const { return order_; }
  /// Same ideal with coefficients viewed in Q(zeta_order).
  GradedIdeal embed(unsigned order) const;

  /// (d+1) x dim I_d; columns are a basis of I_d, row i is x^(d-i) y^i.
  ExactMatrix graded_piece(int d) const;
  int dim(int d) const;
  int hilbert_function(int d) const { return d + 1 - dim(d); }
  /// Trop(I_d) on Mon_d.
  Matroid piece_matroid(int d) const;

  std::string to_string() const;

 private:
  struct Cache;

  std::vector<HomogPoly> generators_;
  unsigned order_ = 1;
  std::shared_ptr<Cache> cache_;
};

/// Trop(I) in degrees 0..max_degree.
struct TruncatedTropIdeal {
  int max_degree = 0;
  std::vector<Matroid> pieces;

  const Matroid& piece(int d) const { return pieces.at(static_cast<std::size_t>(d)); }
};

TruncatedTropIdeal tropicalize(const GradedIdeal& ideal, int max_degree);

/// Piecewise equality of circuits up to the truncation degree.
bool same_tropicalization(const TruncatedTropIdeal& a, const TruncatedTropIdeal& b);

/// I in D(U): U is dependent modulo I_d. Decided by the rank of [I_d | e_U].
bool is_dependent_in(const GradedIdeal& ideal, int d, const std::vector<Monomial>& u);

struct AxiomViolation {
  int degree = 0;
  Subset circuit = 0;
  Monomial multiplier;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every circuit S in degree d and monomial m with d + deg m <= D, m*S
/// must be a cycle of the degree d + deg m piece.
AxiomReport tropical_axiom_check(const TruncatedTropIdeal& trop);

/// I + N for monomials N.
GradedIdeal add_monomial_ideal(const GradedIdeal& ideal, const std::vector<Monomial>& monomials);

/// Loops of the initial matroid of Trop(I_d), degree by degree.
std::vector<Subset> initial_loops(const GradedIdeal& ideal, MonomialOrder order, int max_degree);

/// Minimal generators of the initial monomial ideal, read off the initial
/// matroids up to max_degree. For finite colength ideals the caller must pick
/// max_degree at least the regularity.
std::vector<Monomial> initial_monomial_ideal(const GradedIdeal& ideal, MonomialOrder order, int max_degree);

/// Both sides of an equivalence that should hold.
struct EquivalenceCheck {
  bool lhs = false;
  bool rhs = false;
  bool holds() const { return lhs == rhs; }
};

/// U in Mon_(h+k-1) for f of degree k: (f) in D(U) against the conjunction of
/// (f) in D(W) over all W containing U with |W| = k.
EquivalenceCheck dependence_intersection_check(const HomogPoly& f, int h, const std::vector<Monomial>& u);

enum class Variable { kX, kY };

/// x_i I in D(U) against I in D((1/x_i) (U meet x_i Mon)), U in Mon_d.
EquivalenceCheck strata_pullback_check(const GradedIdeal& ideal, Variable var, int d,
                                       const std::vector<Monomial>& u);

}  // namespace trophilb

#endif  // TROPHILB_GRADED_IDEAL_HPP_
