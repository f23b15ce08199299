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

#ifndef TROPHILB_PICTURE_HPP_
#define TROPHILB_PICTURE_HPP_

#include <string>
#include <vector>

#include "trophilb/graded_ideal.hpp"
#include "trophilb/necklace.hpp"

namespace trophilb {

enum class CellColor { kNone, kBlue, kRed, kBoth };

inline bool has_blue(CellColor c) { return c == CellColor::kBlue || c == CellColor::kBoth; }
inline bool has_red(CellColor c) { return c == CellColor::kRed || c == CellColor::kBoth; }
inline CellColor make_color(bool blue, bool red) {
  return blue ? (red ? CellColor::kBoth : CellColor::kBlue) : (red ? CellColor::kRed : CellColor::kNone);
}

/// A circuit of one graded piece, drawn as a chain of dots on the
/// anti-diagonal a + b = degree.
struct Segment {
  int degree = 0;
  Subset elements = 0;  // indices into Mon_degree (y-exponents)
  std::vector<Monomial> dots() const { return monomials_of(degree, elements); }
};

/// Grid of cells x^a y^b with a + b <= max_degree, x horizontal and 1 in the
/// bottom-left corner.
struct Picture {
  int max_degree = -1;
  std::vector<int> hilbert;                  // label of each degree
  std::vector<std::vector<CellColor>> colors;  // colors[d][b] is x^(d-b) y^b
  std::vector<Segment> segments;             // drawn, by degree then circuit order
  std::vector<Segment> omitted;

  CellColor color(int a, int b) const { return colors.at(static_cast<std::size_t>(a + b)).at(static_cast<std::size_t>(b)); }
};

/// The omission test: some circuit S' of a lower degree d' and shifts T of
/// degree d - d' with S inside the union U of the shifted copies and
/// |S| > |U| - |T|. The minimum of |U| - |T| over covering T is found by a
/// sweep over shift positions, exact for any span of S'.
bool is_uninformative(const TruncatedTropIdeal& t, int d, Subset s);

/// Colors come from the initial matroids: blue iff the monomial is not a
/// loop of init for x > y, red iff not a loop of init for x < y.
Picture build_picture(const TruncatedTropIdeal& t, bool omit_uninformative);

/// Colors read off the drawn segments: blue iff the cell is not the
/// top-left end of a segment, red iff not the bottom-right end. Agrees with
/// Picture::colors when nothing is omitted.
std::vector<std::vector<CellColor>> dot_rule_colors(const Picture& p);

std::string render_svg(const Picture& p);
/// Rows from b = max_degree down to 0, one character per cell: B, R, X
/// (both) or '.', followed by the Hilbert labels and the segment list.
std::string render_ascii(const Picture& p);
/// Regular d-gon, bead 0 on the positive x-axis and counterclockwise; black
/// beads filled.
std::string render_necklace_svg(const Necklace& gamma);

}  // namespace trophilb

#endif  // TROPHILB_PICTURE_HPP_
