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

// Random generators and small independent oracles shared by the tests.

#ifndef TROPHILB_TESTS_TEST_SUPPORT_HPP_
#define TROPHILB_TESTS_TEST_SUPPORT_HPP_

#include <random>
#include <string>
#include <vector>

#include "trophilb/graded_ideal.hpp"
#include "trophilb/linalg.hpp"
#include "trophilb/matroid.hpp"

namespace trophilb::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20230517);
  return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int span = 5) {
  Rational q(uniform_int(-span, span), uniform_int(1, 3));
  q.canonicalize();
  return q;
}

inline CycNum random_cycnum(unsigned order, int span = 5) {
  std::vector<Rational> c;
  for (unsigned i = 0; i < euler_phi(order); ++i) c.push_back(random_rational(span));
  return CycNum::from_power_coeffs(order, c);
}

/// Entries are mostly small integers with a share of zeros, so that rank
/// drops and repeated columns actually occur.
inline ExactMatrix random_matrix(int rows, int cols, unsigned order, int zero_percent = 30) {
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = uniform_int(0, 99) < zero_percent ? CycNum(0) : random_cycnum(order, 2);
  }
  return m;
}

/// Rows that are random combinations of `r` random rows: rank at most r.
inline ExactMatrix random_low_rank(int rows, int cols, int r, unsigned order) {
  const ExactMatrix a = random_matrix(rows, r, order, 20);
  const ExactMatrix b = random_matrix(r, cols, order, 20);
  return exact_product(a, b);
}

inline Subset random_subset(int n) {
  Subset s = 0;
  for (int i = 0; i < n; ++i) {
    if (uniform_int(0, 1)) s |= Subset{1} << i;
  }
  return s;
}

inline std::vector<std::string> letters(int n) {
  std::vector<std::string> g;
  for (int i = 0; i < n; ++i) g.push_back("e" + std::to_string(i));
  return g;
}

/// Homogeneous polynomial with small integer coefficients, some zero.
inline HomogPoly random_homog(int degree, int span = 3) {
  std::vector<CycNum> c;
  for (int b = 0; b <= degree; ++b) c.push_back(uniform_int(0, 2) == 0 ? CycNum(0) : CycNum(uniform_int(-span, span)));
  if (std::all_of(c.begin(), c.end(), [](const CycNum& v) { return v.is_zero(); })) c[0] = CycNum(1);
  return HomogPoly(degree, c);
}

inline GradedIdeal random_ideal(int max_gens = 3, int max_degree = 4) {
  std::vector<HomogPoly> gens;
  const int n = uniform_int(1, max_gens);
  for (int i = 0; i < n; ++i) gens.push_back(random_homog(uniform_int(1, max_degree)));
  return GradedIdeal(gens);
}

/// Rank over Q by plain Gaussian elimination with mpq division.
inline int rational_rank(std::vector<std::vector<Rational>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

/// Rank over Q(zeta_d) through the rational block matrix in which every
/// entry becomes its phi(d) x phi(d) multiplication matrix.
inline int block_rank(const ExactMatrix& m) {
  unsigned order = 1;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) order = std::lcm(order, m(i, j).order());
  }
  const int phi = static_cast<int>(euler_phi(order));
  std::vector<std::vector<Rational>> big(static_cast<std::size_t>(m.rows() * phi),
                                         std::vector<Rational>(static_cast<std::size_t>(m.cols() * phi)));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const CycNum a = m(i, j).embed(order);
      for (int t = 0; t < phi; ++t) {
        // column t of the multiplication matrix holds a * zeta^t
        const CycNum col = a * CycNum::zeta_power(order, t);
        for (int s = 0; s < phi; ++s) {
          big[static_cast<std::size_t>(i * phi + s)][static_cast<std::size_t>(j * phi + t)] =
              col.embed(order).coeffs()[static_cast<std::size_t>(s)];
        }
      }
    }
  }
  return rational_rank(big) / phi;
}

/// Circuits by brute force over all subsets with the library rank only.
inline std::vector<Subset> brute_force_circuits(const Matroid& m) {
  std::vector<Subset> out;
  const int n = m.size();
  for (Subset s = 1; s <= full_subset(n); ++s) {
    if (!m.is_dependent(s)) continue;
    bool minimal = true;
    for (int e : subset_elements(s)) minimal = minimal && !m.is_dependent(s & ~(Subset{1} << e));
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trophilb::testing

#endif  // TROPHILB_TESTS_TEST_SUPPORT_HPP_
