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

#ifndef TROPHILB_NECKLACE_HPP_
#define TROPHILB_NECKLACE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "trophilb/graded_ideal.hpp"
#include "trophilb/schur.hpp"

namespace trophilb {

constexpr int kMaxNecklaceBeads = 24;

/// Lexicographically least rotation of a bit string.
std::string canonical_rotation(std::string_view bits);

/// Binary necklace: d beads, the black ones at `positions` (a representative;
/// identity is decided by the canonical bit string, black = '1').
class Necklace {
 public:
  Necklace() = default;
  Necklace(int d, std::vector<int> positions);  // residues mod d; throws std::invalid_argument
  static Necklace parse(std::string_view bits);   // "110000" is {0,1} in Z/6

  int d() const { return d_; }
  int k() const { return static_cast<int>(positions_.size()); }
  const std::vector<int>& positions() const { return positions_; }
  std::string bits() const;
  const std::string& canonical() const { return canonical_; }
  std::vector<int> canonical_positions() const;

  friend bool operator==(const Necklace& a, const Necklace& b) { return a.d_ == b.d_ && a.canonical_ == b.canonical_; }
  friend bool operator<(const Necklace& a, const Necklace& b) {
    return a.d_ != b.d_ ? a.d_ < b.d_ : a.canonical_ < b.canonical_;
  }

 private:
  int d_ = 1;
  std::vector<int> positions_;
  std::string canonical_;
};

/// One necklace per rotation class. Each representative is the rotation with
/// the lexicographically largest bit string, so bead 0 is black. Ordered by
/// decreasing representative bit string.
std::vector<Necklace> enumerate_necklaces(int d, int k);

/// Number of rotation classes by Burnside's lemma.
long necklace_count(int d, int k);

/// a*gamma: positions p -> a p mod d. Requires gcd(a, d) = 1.
Necklace skip(const Necklace& gamma, int a);

/// The principal ideal (prod_p (x - zeta_d^p y)) over Q(zeta_d).
HomogPoly necklace_polynomial(const Necklace& gamma);
GradedIdeal ideal_of(const Necklace& gamma);
/// Points (-zeta_d^p, 1), the negative-root configuration of ideal_of.
PointConfig points_of(const Necklace& gamma);

TruncatedTropIdeal trop_of(const Necklace& gamma, int max_degree);
/// Same circuits in every degree up to max_degree ("equal up to D").
bool trop_equal(const Necklace& a, const Necklace& b, int max_degree);

/// gcd of the k cyclic distances between consecutive black beads.
int gcd_alpha(const Necklace& gamma);
/// {x^d', y^d'} dependent in Trop(gamma), by the gcd criterion: (d/alpha) | d'.
bool power_pair_dependent(const Necklace& gamma, int d_prime);

/// det(zeta_d^(p_i q_j)) over the canonical positions of the two necklaces.
/// Only its vanishing is independent of the chosen representatives.
CycNum necklace_determinant(const Necklace& a, const Necklace& b);

struct EtaResult {
  bool collision = false;
  std::vector<int> exponents;  // reduced mod d, in the order i = 1..k
  Necklace necklace;           // valid when !collision
};

/// Exponents lambda_i + k - i mod d (minus one more with `shift_minus_one`).
EtaResult eta(int d, int k, const Partition& lambda, bool shift_minus_one = false);

struct CommutativityResult {
  bool applicable = false;  // false on a collision
  bool lhs = false;         // eta(lambda) in D(U_lambda'^{g,k})
  bool rhs = false;         // eta(lambda') in D(U_lambda^{g,k})
  std::string note;
  bool holds() const { return !applicable || lhs == rhs; }
};

/// Both memberships are decided through theorem_check on the necklace ideals.
CommutativityResult commutativity_check(int d, const Partition& lambda, const Partition& lambda_prime, int g, int k);
/// Same, with gamma supplied; it must be the necklace eta(lambda).
CommutativityResult commutativity_check(const Necklace& gamma, const Partition& lambda, const Partition& lambda_prime,
                                        int g);

/// A pair with equal truncated tropicalizations that no unit a relates.
struct ConversePair {
  Necklace first;
  Necklace second;
};

/// trops[i] must be the tropicalization of necklaces[i] (all in one N_{d,k}).
/// Taking the table as input lets callers feed arbitrary data through the
/// same reporting path.
std::vector<ConversePair> find_converse_pairs(const std::vector<Necklace>& necklaces,
                                              const std::vector<TruncatedTropIdeal>& trops);
std::vector<ConversePair> converse_skip_search(int d, int k, int max_degree);

}  // namespace trophilb

#endif  // TROPHILB_NECKLACE_HPP_
