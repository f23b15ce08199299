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

#ifndef TROPHILB_POLYNOMIAL_HPP_
#define TROPHILB_POLYNOMIAL_HPP_

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "trophilb/cyclotomic.hpp"

namespace trophilb {

/// x^a y^b.
struct Monomial {
  int a = 0;
  int b = 0;

  int degree() const { return a + b; }
  /// Canonical label "x^a*y^b" (exponents always written).
  std::string label() const;
  /// Short form for display: "x^2*y", "y^5", "1".
  std::string pretty() const;
  bool divides(const Monomial& other) const { return a <= other.a && b <= other.b; }

  friend Monomial operator*(const Monomial& l, const Monomial& r) { return {l.a + r.a, l.b + r.b}; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Mon_d listed by increasing y-exponent: index i is x^(d-i) y^i.
std::vector<Monomial> monomials_of_degree(int d);
inline int index_in_degree(const Monomial& m) { return m.b; }

/// Accepts the canonical label and the short form.
Monomial parse_monomial(std::string_view text);

/// Homogeneous polynomial of a fixed degree; coefficient i belongs to
/// x^(d-i) y^i.
class HomogPoly {
 public:
  HomogPoly() = default;
  explicit HomogPoly(int degree);
  HomogPoly(int degree, std::vector<CycNum> coeffs);
  static HomogPoly monomial(const Monomial& m, const CycNum& c = CycNum(1));

  int degree() const { return degree_; }
  const std::vector<CycNum>& coeffs() const { return coeffs_; }
  const CycNum& coeff(const Monomial& m) const;
  const CycNum& coeff_by_y(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  void set_coeff(const Monomial& m, const CycNum& c);

  bool is_zero() const;
  bool is_monomial() const { return support().size() == 1; }
  std::vector<Monomial> support() const;
  /// lcm of the coefficient orders.
  unsigned order() const;
  HomogPoly embed(unsigned order) const;

  HomogPoly operator-() const;
  friend HomogPoly operator+(const HomogPoly& l, const HomogPoly& r);
  friend HomogPoly operator-(const HomogPoly& l, const HomogPoly& r);
  friend HomogPoly operator*(const HomogPoly& l, const HomogPoly& r);
  friend HomogPoly operator*(const CycNum& c, const HomogPoly& p);
  friend HomogPoly operator*(const Monomial& m, const HomogPoly& p);
  friend bool operator==(const HomogPoly& l, const HomogPoly& r);

  std::string to_string() const;

 private:
  int degree_ = 0;
  std::vector<CycNum> coeffs_{CycNum(0)};
};

/// A polynomial as parsed, not necessarily homogeneous. Zero coefficients are
/// never stored.
using SparsePoly = std::map<Monomial, CycNum>;

/// Parses the polynomial grammar: sums of terms, each a product of
/// coefficients ("3", "2/5", "z(6)", parenthesized sums) and powers of x, y.
/// '*' may be omitted between factors. Throws ParseError.
SparsePoly parse_polynomial(std::string_view text);

/// Same grammar, but the result must be homogeneous and nonzero.
HomogPoly parse_homog_poly(std::string_view text);

/// Homogeneous generators separated by ';'. Empty pieces are skipped.
std::vector<HomogPoly> parse_generators(std::string_view text);

}  // namespace trophilb

#endif  // TROPHILB_POLYNOMIAL_HPP_
