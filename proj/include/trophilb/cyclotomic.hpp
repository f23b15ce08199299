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

#ifndef TROPHILB_CYCLOTOMIC_HPP_
#define TROPHILB_CYCLOTOMIC_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "trophilb/rational.hpp"

namespace trophilb {

/// Integer polynomial, coefficients listed from the constant term upwards.
using IntPoly = std::vector<Integer>;

/// Euler's totient.
unsigned euler_phi(unsigned n);

/// The monic d-th cyclotomic polynomial, obtained by dividing x^d - 1 by
/// Phi_e for every proper divisor e of d.
IntPoly cyclotomic_polynomial(unsigned d);

namespace detail {
struct CyclotomicField;
const CyclotomicField& cyclotomic_field(unsigned order);
}  // namespace detail

/// An element of Q(zeta_d), stored as its unique residue modulo Phi_d in the
/// power basis 1, zeta, ..., zeta^(phi(d)-1). Order 1 is plain Q.
///
/// Binary operations on numbers of different orders first embed both
/// operands into Q(zeta_lcm). Values are immutable once built and can be
/// shared freely between threads.
class CycNum {
 public:
  CycNum();
  CycNum(long value);  // NOLINT(google-explicit-constructor)
  CycNum(int value) : CycNum(static_cast<long>(value)) {}  // NOLINT
  CycNum(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// Builds sum_i coeffs[i] * zeta_d^i, reducing modulo Phi_d.
  /// Any number of coefficients is accepted.
  static CycNum from_power_coeffs(unsigned order, const std::vector<Rational>& coeffs);

  /// zeta_d^e for any integer e (negative allowed).
  static CycNum zeta_power(unsigned order, long exponent);

  unsigned order() const;
  unsigned degree() const;  // phi(order)
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True if the value lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  const Rational& constant_term() const { return coeffs_[0]; }

  /// Embeds into Q(zeta_m). Requires order() | m.
  CycNum embed(unsigned m) const;

  /// Multiplicative inverse, via the extended Euclidean algorithm against
  /// Phi_d. Throws std::domain_error on zero.
  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);
  CycNum& operator/=(const CycNum& rhs);

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(const CycNum& lhs, const CycNum& rhs);
  friend CycNum operator/(const CycNum& lhs, const CycNum& rhs) { return lhs * rhs.inverse(); }
  friend bool operator==(const CycNum& lhs, const CycNum& rhs);
  friend bool operator!=(const CycNum& lhs, const CycNum& rhs) { return !(lhs == rhs); }

  CycNum pow(long exponent) const;

  /// Human readable form in the input syntax, e.g. "z(6)^2 - z(6) + 1".
  std::string to_string() const;

 private:
  CycNum(const detail::CyclotomicField* field, std::vector<Rational> coeffs);

  const detail::CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& value);

inline CycNum zeta_power(unsigned order, long exponent) { return CycNum::zeta_power(order, exponent); }
inline bool is_zero(const CycNum& value) { return value.is_zero(); }

/// Parses a constant coefficient expression such as "3/4", "z(6)^2 - z(6) + 1"
/// or "-(1+z(4))". Throws ParseError with the offending position.
CycNum parse_cycnum(std::string_view text);

}  // namespace trophilb

namespace Eigen {

template <>
struct NumTraits<trophilb::CycNum> : GenericNumTraits<trophilb::CycNum> {
  using Real = trophilb::CycNum;
  using NonInteger = trophilb::CycNum;
  using Literal = trophilb::CycNum;
  using Nested = trophilb::CycNum;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // TROPHILB_CYCLOTOMIC_HPP_
