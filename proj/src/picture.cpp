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

#include "trophilb/picture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace trophilb {

namespace {

// min over nonempty shift sets J covering s of |union(s' + j)| - |J|, for
// shifts j in [0, shifts). Returns INT_MAX when s cannot be covered.
int min_excess(Subset s_prime, int shifts, Subset s, int d) {
  const auto elems = subset_elements(s_prime);
  const int b0 = elems.front();
  std::vector<int> offsets;
  for (int e : elems) offsets.push_back(e - b0);
  const int w = offsets.back();
  if (w > 20) return std::numeric_limits<int>::max();
  for (int p = 0; p <= d; ++p) {
    if (contains(s, p) && (p < b0 || p > b0 + w + shifts - 1)) return std::numeric_limits<int>::max();
  }
  const std::uint32_t window = (std::uint32_t{1} << (w + 1)) - 1;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(std::size_t{1} << (w + 1), kInf);
  best[0] = 0;
  // Position p = c + b0 is settled once shift c is decided; bit o of the
  // state records whether shift c - o was chosen.
  for (int c = 0; c < shifts + w; ++c) {
    std::vector<int> next(best.size(), kInf);
    const int p = c + b0;
    for (std::uint32_t state = 0; state < best.size(); ++state) {
      if (best[state] >= kInf) continue;
      for (int choose = 0; choose <= (c < shifts ? 1 : 0); ++choose) {
        const std::uint32_t ns = ((state << 1) | static_cast<std::uint32_t>(choose)) & window;
        bool covered = false;
        for (int o : offsets) covered = covered || ((ns >> o) & 1U);
        if (p <= d && contains(s, p) && !covered) continue;
        const int score = best[state] + (covered ? 1 : 0) - choose;
        next[ns] = std::min(next[ns], score);
      }
    }
    best = std::move(next);
  }
  const int m = *std::min_element(best.begin(), best.end());
  return m >= kInf ? std::numeric_limits<int>::max() : m;
}

}  // namespace

bool is_uninformative(const TruncatedTropIdeal& t, int d, Subset s) {
  const int size = subset_size(s);
  for (int dp = 0; dp < d; ++dp) {
    for (Subset sp : t.piece(dp).circuit_sets()) {
      if (size > min_excess(sp, d - dp + 1, s, d)) return true;
    }
  }
  return false;
}

Picture build_picture(const TruncatedTropIdeal& t, bool omit_uninformative) {
  Picture p;
  p.max_degree = t.max_degree;
  for (int d = 0; d <= t.max_degree; ++d) {
    const Matroid& m = t.piece(d);
    p.hilbert.push_back(m.rank());
    const Subset blue_loops = initial_matroid(m, degree_order(d, MonomialOrder::kXAboveY)).loops;
    const Subset red_loops = initial_matroid(m, degree_order(d, MonomialOrder::kXBelowY)).loops;
    std::vector<CellColor> row;
    for (int b = 0; b <= d; ++b) row.push_back(make_color(!contains(blue_loops, b), !contains(red_loops, b)));
    p.colors.push_back(std::move(row));
    for (Subset c : m.circuit_sets()) {
      Segment seg{d, c};
      if (omit_uninformative && is_uninformative(t, d, c)) {
        p.omitted.push_back(seg);
      } else {
        p.segments.push_back(seg);
      }
    }
  }
  return p;
}

std::vector<std::vector<CellColor>> dot_rule_colors(const Picture& p) {
  std::vector<std::vector<bool>> top_left(static_cast<std::size_t>(p.max_degree + 1));
  std::vector<std::vector<bool>> bottom_right(top_left.size());
  for (int d = 0; d <= p.max_degree; ++d) {
    top_left[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d + 1), false);
    bottom_right[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d + 1), false);
  }
  for (const auto& seg : p.segments) {
    const auto e = subset_elements(seg.elements);
    top_left[static_cast<std::size_t>(seg.degree)][static_cast<std::size_t>(e.back())] = true;
    bottom_right[static_cast<std::size_t>(seg.degree)][static_cast<std::size_t>(e.front())] = true;
  }
  std::vector<std::vector<CellColor>> out;
  for (int d = 0; d <= p.max_degree; ++d) {
    std::vector<CellColor> row;
    for (int b = 0; b <= d; ++b) {
      row.push_back(make_color(!top_left[static_cast<std::size_t>(d)][static_cast<std::size_t>(b)],
                               !bottom_right[static_cast<std::size_t>(d)][static_cast<std::size_t>(b)]));
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

constexpr int kCell = 24;
constexpr int kMargin = 24;

std::string fixed3(double v) {
  if (std::fabs(v) < 5e-4) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Picture& p) {
  const int n = p.max_degree + 1;
  const int width = n * kCell + 2 * kMargin;
  const int height = n * kCell + 2 * kMargin + (n > 0 ? kCell : 0);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<defs>\n"
         "<pattern id=\"hstripe\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
         "<rect width=\"6\" height=\"3\" fill=\"#3b6fd4\"/></pattern>\n"
         "<pattern id=\"vstripe\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
         "<rect width=\"3\" height=\"6\" fill=\"#d43b3b\"/></pattern>\n"
         "</defs>\n";
  auto left = [](int a) { return kMargin + a * kCell; };
  auto top = [&](int b) { return kMargin + (n - 1 - b) * kCell; };
  for (int d = 0; d < n; ++d) {
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      const CellColor c = p.colors[static_cast<std::size_t>(d)][static_cast<std::size_t>(b)];
      out << "<rect x=\"" << left(a) << "\" y=\"" << top(b) << "\" width=\"" << kCell << "\" height=\"" << kCell
          << "\" fill=\"white\" stroke=\"#999999\"/>\n";
      if (has_blue(c)) {
        out << "<rect x=\"" << left(a) << "\" y=\"" << top(b) << "\" width=\"" << kCell << "\" height=\"" << kCell
            << "\" fill=\"url(#hstripe)\" fill-opacity=\"0.6\"/>\n";
      }
      if (has_red(c)) {
        out << "<rect x=\"" << left(a) << "\" y=\"" << top(b) << "\" width=\"" << kCell << "\" height=\"" << kCell
            << "\" fill=\"url(#vstripe)\" fill-opacity=\"0.6\"/>\n";
      }
    }
  }
  for (const auto& seg : p.segments) {
    const auto dots = seg.dots();
    if (dots.size() > 1) {
      out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
      for (std::size_t i = 0; i < dots.size(); ++i) {
        out << (i ? " " : "") << left(dots[i].a) + kCell / 2 << ',' << top(dots[i].b) + kCell / 2;
      }
      out << "\"/>\n";
    }
    for (const auto& m : dots) {
      out << "<circle cx=\"" << left(m.a) + kCell / 2 << "\" cy=\"" << top(m.b) + kCell / 2
          << "\" r=\"3\" fill=\"black\"/>\n";
    }
  }
  for (int d = 0; d < n; ++d) {
    out << "<text x=\"" << left(d) + kCell / 2 << "\" y=\"" << kMargin + n * kCell + kCell / 2 + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << p.hilbert[static_cast<std::size_t>(d)]
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const Picture& p) {
  std::ostringstream out;
  for (int b = p.max_degree; b >= 0; --b) {
    for (int a = 0; a + b <= p.max_degree; ++a) {
      switch (p.color(a, b)) {
        case CellColor::kBoth:
          out << 'X';
          break;
        case CellColor::kBlue:
          out << 'B';
          break;
        case CellColor::kRed:
          out << 'R';
          break;
        case CellColor::kNone:
          out << '.';
          break;
      }
    }
    out << '\n';
  }
  out << "h:";
  for (int h : p.hilbert) out << ' ' << h;
  out << '\n';
  for (const auto& seg : p.segments) {
    out << "d=" << seg.degree << ':';
    for (const auto& m : seg.dots()) out << ' ' << m.pretty();
    out << '\n';
  }
  out << "omitted: " << p.omitted.size() << '\n';
  return out.str();
}

std::string render_necklace_svg(const Necklace& gamma) {
  constexpr double kCenter = 100.0;
  constexpr double kRadius = 70.0;
  const int d = gamma.d();
  std::vector<bool> black(static_cast<std::size_t>(d), false);
  for (int p : gamma.positions()) black[static_cast<std::size_t>(p)] = true;
  std::vector<std::pair<std::string, std::string>> pts;
  for (int i = 0; i < d; ++i) {
    const double angle = 2.0 * M_PI * i / d;
    pts.emplace_back(fixed3(kCenter + kRadius * std::cos(angle)), fixed3(kCenter - kRadius * std::sin(angle)));
  }
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"200\" height=\"200\" viewBox=\"0 0 200 200\">\n";
  out << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int i = 0; i < d; ++i) out << (i ? " " : "") << pts[static_cast<std::size_t>(i)].first << ',' << pts[static_cast<std::size_t>(i)].second;
  out << "\"/>\n";
  for (int i = 0; i < d; ++i) {
    out << "<circle cx=\"" << pts[static_cast<std::size_t>(i)].first << "\" cy=\"" << pts[static_cast<std::size_t>(i)].second
        << "\" r=\"8\" stroke=\"black\" stroke-width=\"2\" fill=\"" << (black[static_cast<std::size_t>(i)] ? "black" : "white")
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace trophilb
