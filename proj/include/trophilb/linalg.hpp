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

// Exact elimination over any field-like scalar (Rational, CycNum). All
// routines are fraction-free Bareiss sweeps; division only happens by the
// previous pivot (exact) and in back-substitution.

#ifndef TROPHILB_LINALG_HPP_
#define TROPHILB_LINALG_HPP_

#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "trophilb/cyclotomic.hpp"

namespace trophilb {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using ExactMatrix = Matrix<CycNum>;
using ExactVector = Vector<CycNum>;
using Index = Eigen::Index;

/// Row echelon form produced by a Bareiss sweep. Row i < pivots.size() has
/// its leading nonzero in column pivots[i]; all later rows are zero.
template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;
  int sign = 1;              // parity of the row swaps
  Scalar last_pivot{1};      // equals +-det for a nonsingular square input
};

template <class Scalar>
inline bool scalar_is_zero(const Scalar& s) {
  return s == Scalar(0);
}
template <>
inline bool scalar_is_zero<CycNum>(const CycNum& s) {
  return s.is_zero();
}

template <class Derived>
Echelon<typename Derived::Scalar> bareiss_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = m;
  Matrix<Scalar>& a = out.reduced;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Scalar prev(1);
  bool prev_is_one = true;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && scalar_is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      out.sign = -out.sign;
    }
    const Scalar pivot = a(r, c);
    Scalar prev_inv;
    if (!prev_is_one) prev_inv = Scalar(1) / prev;
    for (Index i = r + 1; i < rows; ++i) {
      const Scalar factor = a(i, c);
      const bool factor_zero = scalar_is_zero(factor);
      for (Index j = c + 1; j < cols; ++j) {
        Scalar v = pivot * a(i, j);
        if (!factor_zero) v -= factor * a(r, j);
        if (!prev_is_one) v *= prev_inv;
        a(i, j) = std::move(v);
      }
      a(i, c) = Scalar(0);
    }
    out.pivots.push_back(c);
    prev = pivot;
    prev_is_one = false;
    ++r;
  }
  out.last_pivot = prev;
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(bareiss_echelon(m).pivots.size());
}

template <class Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::domain_error("determinant: matrix is not square");
  if (m.rows() == 0) return Scalar(1);
  auto e = bareiss_echelon(m);
  if (static_cast<Index>(e.pivots.size()) < m.rows()) return Scalar(0);
  return e.sign > 0 ? e.last_pivot : Scalar(-e.last_pivot);
}

/// Columns form a basis of {v : m v = 0}.
template <class Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = bareiss_echelon(m);
  const Index cols = m.cols();
  const Index r = static_cast<Index>(e.pivots.size());
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Scalar> pivot_inv;
  pivot_inv.reserve(static_cast<std::size_t>(r));
  for (Index i = 0; i < r; ++i) pivot_inv.push_back(Scalar(1) / e.reduced(i, e.pivots[i]));

  Matrix<Scalar> basis(cols, cols - r);
  Index out_col = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(cols, Scalar(0));
    v(f) = Scalar(1);
    for (Index i = r - 1; i >= 0; --i) {
      const Index p = e.pivots[i];
      Scalar acc(0);
      for (Index j = p + 1; j < cols; ++j) {
        if (!scalar_is_zero(v(j)) && !scalar_is_zero(e.reduced(i, j))) acc += e.reduced(i, j) * v(j);
      }
      if (!scalar_is_zero(acc)) v(p) = -(acc * pivot_inv[static_cast<std::size_t>(i)]);
    }
    basis.col(out_col++) = v;
  }
  return basis;
}

/// Indices of a maximal independent set of columns (the leftmost one).
template <class Derived>
std::vector<Index> column_basis(const Eigen::MatrixBase<Derived>& m) {
  return bareiss_echelon(m).pivots;
}

/// The columns of m listed by column_basis, as a matrix.
template <class Derived>
Matrix<typename Derived::Scalar> independent_columns(const Eigen::MatrixBase<Derived>& m) {
  auto idx = column_basis(m);
  Matrix<typename Derived::Scalar> out(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Index>(i)) = m.col(idx[i]);
  return out;
}

/// Plain product for exact scalars, avoiding Eigen's blocked kernels.
template <class DerivedA, class DerivedB>
Matrix<typename DerivedA::Scalar> exact_product(const Eigen::MatrixBase<DerivedA>& a,
                                                const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.cols() != b.rows()) throw std::domain_error("exact_product: dimension mismatch");
  Matrix<Scalar> out = Matrix<Scalar>::Constant(a.rows(), b.cols(), Scalar(0));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      if (scalar_is_zero(a(i, k))) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        if (!scalar_is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

/// Embeds every entry into Q(zeta_order). Each entry's order must divide it.
ExactMatrix embed(const ExactMatrix& m, unsigned order);

/// Least common multiple of the orders of all entries (1 for an empty matrix).
unsigned common_order(const ExactMatrix& m);

}  // namespace trophilb

#endif  // TROPHILB_LINALG_HPP_
