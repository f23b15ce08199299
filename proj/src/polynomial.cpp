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

#include "trophilb/polynomial.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trophilb {

std::string Monomial::label() const { return "x^" + std::to_string(a) + "*y^" + std::to_string(b); }

std::string Monomial::pretty() const {
  if (a == 0 && b == 0) return "1";
  std::string out;
  if (a > 0) out += a == 1 ? "x" : "x^" + std::to_string(a);
  if (b > 0) {
    if (!out.empty()) out += "*";
    out += b == 1 ? "y" : "y^" + std::to_string(b);
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  out.reserve(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) out.push_back({d - i, i});
  return out;
}

HomogPoly::HomogPoly(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1), CycNum(0)) {
  if (degree < 0) throw std::invalid_argument("HomogPoly: negative degree");
}

HomogPoly::HomogPoly(int degree, std::vector<CycNum> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree + 1)) {
    throw std::invalid_argument("HomogPoly: coefficient count must be degree + 1");
  }
}

HomogPoly HomogPoly::monomial(const Monomial& m, const CycNum& c) {
  HomogPoly p(m.degree());
  p.coeffs_[static_cast<std::size_t>(m.b)] = c;
  return p;
}

const CycNum& HomogPoly::coeff(const Monomial& m) const {
  if (m.degree() != degree_) throw std::invalid_argument("HomogPoly::coeff: degree mismatch");
  return coeffs_[static_cast<std::size_t>(m.b)];
}

void HomogPoly::set_coeff(const Monomial& m, const CycNum& c) {
  if (m.degree() != degree_) throw std::invalid_argument("HomogPoly::set_coeff: degree mismatch");
  coeffs_[static_cast<std::size_t>(m.b)] = c;
}

bool HomogPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<Monomial> HomogPoly::support() const {
  std::vector<Monomial> out;
  for (int i = 0; i <= degree_; ++i) {
    if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) out.push_back({degree_ - i, i});
  }
  return out;
}

unsigned HomogPoly::order() const {
  unsigned o = 1;
  for (const auto& c : coeffs_) o = std::lcm(o, c.order());
  return o;
}

HomogPoly HomogPoly::embed(unsigned order) const {
  HomogPoly out(*this);
  for (auto& c : out.coeffs_) c = c.embed(order);
  return out;
}

HomogPoly HomogPoly::operator-() const {
  HomogPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

HomogPoly operator+(const HomogPoly& l, const HomogPoly& r) {
  if (l.degree_ != r.degree_) throw std::invalid_argument("HomogPoly: adding different degrees");
  HomogPoly out(l);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += r.coeffs_[i];
  return out;
}

HomogPoly operator-(const HomogPoly& l, const HomogPoly& r) { return l + (-r); }

HomogPoly operator*(const HomogPoly& l, const HomogPoly& r) {
  HomogPoly out(l.degree_ + r.degree_);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
    if (l.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
      if (!r.coeffs_[j].is_zero()) out.coeffs_[i + j] += l.coeffs_[i] * r.coeffs_[j];
    }
  }
  return out;
}

HomogPoly operator*(const CycNum& c, const HomogPoly& p) {
  HomogPoly out(p);
  for (auto& v : out.coeffs_) v = c * v;
  return out;
}

HomogPoly operator*(const Monomial& m, const HomogPoly& p) {
  HomogPoly out(p.degree_ + m.degree());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out.coeffs_[i + static_cast<std::size_t>(m.b)] = p.coeffs_[i];
  return out;
}

bool operator==(const HomogPoly& l, const HomogPoly& r) {
  if (l.is_zero() && r.is_zero()) return true;
  return l.degree_ == r.degree_ && l.coeffs_ == r.coeffs_;
}

namespace {

std::string coefficient_text(const CycNum& c, bool& negative) {
  negative = false;
  if (c.is_rational()) {
    Rational q = c.constant_term();
    if (q < 0) {
      negative = true;
      q = -q;
    }
    return q.get_str();
  }
  return "(" + c.to_string() + ")";
}

}  // namespace

std::string HomogPoly::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree_; ++i) {
    const CycNum& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string text = coefficient_text(c, negative);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Monomial m{degree_ - i, i};
    if (m.degree() == 0) {
      out << text;
    } else if (text == "1") {
      out << m.pretty();
    } else {
      out << text << "*" << m.pretty();
    }
  }
  if (first) return "0";
  return out.str();
}

namespace {

void add_term(SparsePoly& p, const Monomial& m, const CycNum& c) {
  auto it = p.find(m);
  if (it == p.end()) {
    if (!c.is_zero()) p.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

SparsePoly add(const SparsePoly& l, const SparsePoly& r, bool subtract) {
  SparsePoly out = l;
  for (const auto& [m, c] : r) add_term(out, m, subtract ? -c : c);
  return out;
}

SparsePoly mul(const SparsePoly& l, const SparsePoly& r) {
  SparsePoly out;
  for (const auto& [m1, c1] : l) {
    for (const auto& [m2, c2] : r) add_term(out, m1 * m2, c1 * c2);
  }
  return out;
}

SparsePoly constant(const CycNum& c) {
  SparsePoly p;
  if (!c.is_zero()) p.emplace(Monomial{0, 0}, c);
  return p;
}

bool is_constant(const SparsePoly& p) { return p.empty() || (p.size() == 1 && p.begin()->first == Monomial{0, 0}); }

class Parser {
 public:
  Parser(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  SparsePoly parse() {
    SparsePoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z' || c == '(';
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  long small_integer() {
    const std::size_t start = pos_;
    Integer v = integer();
    if (!v.fits_slong_p() || v > 100000) {
      pos_ = start;
      fail("integer too large");
    }
    return v.get_si();
  }

  SparsePoly expr() {
    SparsePoly acc;
    bool negate = false;
    if (at('+')) {
      ++pos_;
    } else if (at('-')) {
      ++pos_;
      negate = true;
    }
    acc = term();
    if (negate) acc = add(SparsePoly{}, acc, true);
    while (true) {
      if (at('+')) {
        ++pos_;
        acc = add(acc, term(), false);
      } else if (at('-')) {
        ++pos_;
        acc = add(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  SparsePoly term() {
    SparsePoly acc = factor();
    while (true) {
      if (at('*')) {
        ++pos_;
        acc = mul(acc, factor());
      } else if (starts_factor()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  SparsePoly factor() {
    SparsePoly base = primary();
    if (!at('^')) return base;
    ++pos_;
    bool negative = false;
    if (at('-')) {
      ++pos_;
      negative = true;
    }
    const std::size_t exp_pos = pos_;
    long e = small_integer();
    if (negative) {
      if (!is_constant(base) || base.empty()) {
        pos_ = exp_pos;
        fail("negative exponent on a non-invertible factor");
      }
      return constant(base.begin()->second.pow(-e));
    }
    SparsePoly result = constant(CycNum(1));
    for (long i = 0; i < e; ++i) result = mul(result, base);
    return result;
  }

  SparsePoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational q(integer());
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        Integer den = integer();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        q /= Rational(den);
        q.canonicalize();
      }
      return constant(CycNum(q));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      SparsePoly p;
      p.emplace(c == 'x' ? Monomial{1, 0} : Monomial{0, 1}, CycNum(1));
      return p;
    }
    if (c == 'z') {
      ++pos_;
      if (!at('(')) fail("expected '(' after z");
      ++pos_;
      const std::size_t order_pos = pos_;
      long d = small_integer();
      if (d < 1 || d > 10000) {
        pos_ = order_pos;
        fail("root of unity order must be positive");
      }
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return constant(CycNum::zeta_power(static_cast<unsigned>(d), 1));
    }
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

HomogPoly to_homog(const SparsePoly& p, std::size_t base) {
  if (p.empty()) throw ParseError("zero polynomial", base);
  const int d = p.begin()->first.degree();
  for (const auto& [m, c] : p) {
    if (m.degree() != d) throw ParseError("polynomial is not homogeneous", base);
  }
  HomogPoly out(d);
  for (const auto& [m, c] : p) out.set_coeff(m, c);
  return out;
}

}  // namespace

SparsePoly parse_polynomial(std::string_view text) { return Parser(text, 0).parse(); }

HomogPoly parse_homog_poly(std::string_view text) { return to_homog(parse_polynomial(text), 0); }

std::vector<HomogPoly> parse_generators(std::string_view text) {
  std::vector<HomogPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = true;
    for (char c : piece) blank = blank && std::isspace(static_cast<unsigned char>(c));
    if (!blank) {
      std::size_t lead = 0;
      while (std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      out.push_back(to_homog(Parser(piece, start).parse(), start + lead));
    }
    start = end + 1;
  }
  return out;
}

CycNum parse_cycnum(std::string_view text) {
  SparsePoly p = Parser(text, 0).parse();
  if (!is_constant(p)) throw ParseError("expected a constant, found a variable", 0);
  return p.empty() ? CycNum(0) : p.begin()->second;
}

Monomial parse_monomial(std::string_view text) {
  SparsePoly p = Parser(text, 0).parse();
  if (p.size() != 1 || !p.begin()->second.is_one()) throw ParseError("expected a monomial", 0);
  return p.begin()->first;
}

}  // namespace trophilb
