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

#ifndef TROPHILB_MATROID_HPP_
#define TROPHILB_MATROID_HPP_

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "trophilb/linalg.hpp"

namespace trophilb {

/// Subsets of a ground set of at most 64 elements, bit i = element i.
using Subset = std::uint64_t;

inline int subset_size(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int i) { return (s >> i) & 1U; }
inline Subset full_subset(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
std::vector<int> subset_elements(Subset s);

/// A total order on the ground set, listed from smallest to largest.
using Order = std::vector<int>;
Order index_order(int n);
Order reversed(const Order& order);

constexpr std::size_t kDefaultCircuitBound = 24;

/// A circuit together with a vector of V supported exactly on it.
struct Circuit {
  Subset elements = 0;
  ExactVector certificate;
};

/// Matroid realized by a matrix Q: r(S) is the rank of the columns of Q
/// indexed by S. When built from a subspace V, the rows of Q span the
/// annihilator of V, so r(S) = |S| - dim(V meet k^S) and the circuits are the
/// minimal supports of vectors in V.
class Matroid {
 public:
  Matroid() = default;

  /// `span_vectors` has one row per ground element; its columns span V.
  static Matroid from_subspace(std::vector<std::string> ground, const ExactMatrix& span_vectors);
  /// Column matroid of `q` (one column per ground element).
  static Matroid from_realization(std::vector<std::string> ground, ExactMatrix q);

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  const ExactMatrix& realization() const { return q_; }
  /// A basis of V (as columns): the kernel of the realization.
  ExactMatrix subspace() const;

  int index_of(const std::string& label) const;  // throws std::out_of_range
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;

  int rank() const { return rank_; }
  int rank(Subset s) const;
  int rank(const std::vector<std::string>& labels) const { return rank(subset_of(labels)); }
  bool is_dependent(Subset s) const { return rank(s) < subset_size(s); }
  bool is_circuit(Subset s) const;
  /// No element of s is a coloop of the restriction to s.
  bool is_cycle(Subset s) const;
  Subset loops() const;
  Subset coloops() const;

  /// All circuits ordered by size, then by index mask. Computed once and
  /// shared by copies. Throws TooLargeError if the ground set exceeds
  /// `circuit_bound()`.
  const std::vector<Circuit>& circuits() const;
  std::vector<Subset> circuit_sets() const;
  std::size_t circuit_bound() const { return bound_; }
  Matroid with_circuit_bound(std::size_t bound) const;

 private:
  struct CircuitCache;

  std::vector<std::string> ground_;
  ExactMatrix q_;
  int rank_ = 0;
  std::size_t bound_ = kDefaultCircuitBound;
  std::shared_ptr<CircuitCache> cache_;
};

/// Same ground size and the same circuits.
bool same_matroid(const Matroid& a, const Matroid& b);

/// U_{k,E}, realized by the Vandermonde rows (j+1)^i.
Matroid uniform(int k, std::vector<std::string> ground);
Matroid direct_sum(const Matroid& m1, const Matroid& m2);
/// M/S on ground E \ S.
Matroid contraction(const Matroid& m, Subset s);
/// M / S with the elements of S put back as loops (ground E).
Matroid looped_contraction(const Matroid& m, Subset s);

struct DiscreteMatroid {
  std::vector<std::string> ground;
  Subset loops = 0;
  Subset coloops = 0;
  int rank() const { return subset_size(coloops); }
};

/// Loops are the order-minimal elements of circuits. Computed greedily: e is a
/// loop iff it lies in the closure of the elements above it.
DiscreteMatroid initial_matroid(const Matroid& m, const Order& order);

}  // namespace trophilb

#endif  // TROPHILB_MATROID_HPP_
