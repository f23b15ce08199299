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

#ifndef TROPHILB_SCHUR_HPP_
#define TROPHILB_SCHUR_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trophilb/graded_ideal.hpp"
#include "trophilb/linalg.hpp"
#include "trophilb/polynomial.hpp"

namespace trophilb {

/// Integer partition; trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws std::invalid_argument
  static Partition parse(std::string_view text);  // "4,1"; "" is the empty partition

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// 1-based part, zero past the end.
  int operator[](int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int weight() const;
  bool fits_in_box(int k, int h) const { return length() <= k && largest() <= h; }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// All partitions in the k x h box (at most k parts, each at most h).
std::vector<Partition> partitions_in_box(int k, int h);

enum class Step { kLeft, kDown };

/// Lattice path along the rim of the Young diagram from (h, 0) to (0, -k).
struct RimPath {
  int h = 0;
  int k = 0;
  std::vector<Step> steps;
};

RimPath rim_path(const Partition& lambda, int h, int k);
/// U_lambda^{h,k} = { x^(h+k-1-i) y^i : step i is DOWN }, in index order.
std::vector<Monomial> monomial_set(const Partition& lambda, int h, int k);
/// Inverse of monomial_set.
Partition partition_of(const std::vector<Monomial>& u, int h, int k);

/// k points [x_i : y_i] of P^1.
struct PointConfig {
  std::vector<std::pair<CycNum, CycNum>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  /// Every coordinate embedded into the smallest common cyclotomic field.
  PointConfig normalized() const;
  std::string to_string() const;
};

/// "(1,1);(z(6),1)". Throws ParseError.
PointConfig parse_points(std::string_view text);

/// The configuration (-zeta_d^p, 1) for p in `positions`, i.e. the negative
/// roots of prod (x - zeta_d^p y).
PointConfig necklace_points(unsigned d, const std::vector<int>& positions);

/// e_j = sum over |A| = j of prod_{i in A} x_i prod_{i not in A} y_i.
CycNum elementary_eval(int j, const PointConfig& p);
std::vector<CycNum> elementary_all(const PointConfig& p);  // e_0..e_k
/// h_i = sum over compositions i_1+..+i_k = i of prod x_j^(i_j) y_j^(i-i_j).
CycNum complete_eval(int i, const PointConfig& p);

/// a_{lambda+delta}(P) / a_delta(P). Throws std::domain_error when two points
/// coincide (denominator zero).
CycNum schur_eval_bialternant(const Partition& lambda, const PointConfig& p);
/// det(e_{lambda'_i + j - i}) of size lambda_1; defined at repeated points.
CycNum schur_eval_jacobi_trudi(const Partition& lambda, const PointConfig& p);
/// The same determinant from the values e_0..e_k alone.
CycNum jacobi_trudi_from_elementary(const Partition& lambda, const std::vector<CycNum>& e);

/// prod (y_i x + x_i y), whose coefficient of x^(k-j) y^j is e_j. This is the
/// negative-root convention: the roots of the result are [-x_i : y_i].
HomogPoly polynomial_of_points(const PointConfig& p);

/// (h+k) x h banded matrix with entry (b, j) = e_(b-j), where e_j is the
/// coefficient of x^(k-j) y^j in f. Row b belongs to x^(h+k-1-b) y^b; column j
/// is x^(h-1-j) y^j * f.
ExactMatrix build_xa(const HomogPoly& f, int h);
/// Same matrix from a list e_0..e_k.
ExactMatrix build_xa(const std::vector<CycNum>& e, int h);
/// build_xa with the rows of `u` removed (a square matrix when |u| = k).
ExactMatrix delete_rows(const ExactMatrix& xa, int h, int k, const std::vector<Monomial>& u);

/// The three sides of the vanishing theorem for U = U_lambda^{h,k}.
struct TheoremCheck {
  bool dependent = false;   // (f) in D(U), from ranks of graded pieces
  bool det_zero = false;    // det of X_A with the rows of U deleted
  bool schur_zero = false;  // e_0^(h - lambda_1) s_lambda
  CycNum det;
  CycNum schur_product;
  /// det = sign * schur_product; 0 when both vanish, and also 0 when they
  /// disagree by something other than a sign (which makes holds() false).
  int sign = 0;
  bool holds() const;
};

/// Point configuration route: e_j and s_lambda are evaluated at the points,
/// the dependence side uses the expanded polynomial.
TheoremCheck theorem_check(const PointConfig& p, const Partition& lambda, int h);
/// Matrix-only route for f that need not split: e_j are read off f.
TheoremCheck theorem_check(const HomogPoly& f, const Partition& lambda, int h);

/// Partitions lambda in the k x h box with U contained in U_lambda^{h,k}.
std::vector<Partition> admissible_partitions(const std::vector<Monomial>& u, int h, int k);

/// For |U| < k: (f) in D(U) against the vanishing of e_0^(h-lambda_1) s_lambda
/// for every admissible lambda.
EquivalenceCheck lambda_intersection_check(const PointConfig& p, int h, const std::vector<Monomial>& u);

}  // namespace trophilb

#endif  // TROPHILB_SCHUR_HPP_
