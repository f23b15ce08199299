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

#ifndef TROPHILB_RATIONAL_HPP_
#define TROPHILB_RATIONAL_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace trophilb {

/// Arbitrary precision integers and rationals. mpq_class keeps values in
/// lowest terms with a positive denominator after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed textual input. `position` is a 0-based offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an enumeration would exceed its configured size bound.
class TooLargeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace trophilb

#endif  // TROPHILB_RATIONAL_HPP_
