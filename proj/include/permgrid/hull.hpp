#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgrid/grid.hpp"
#include "permgrid/permutation.hpp"
#include "permgrid/rectangle.hpp"

namespace permgrid {

enum class Orientation { inc, dec };

// A monotone rectangular hull over a host permutation's plot.
struct Hull {
  Rectangle box;
  Orientation orientation;
};

// A covering of a permutation's plot by pairwise nonintersecting monotone
// hulls.  Indices in error messages are 1-based positions in `hulls`.
struct HullConfig {
  Permutation host;
  std::vector<Hull> hulls;
};

struct PropagationResult {
  GridMatrix matrix;
  Gridding gridding;
  // how many hull interiors the busiest gridline slices (reported, not capped)
  int max_hulls_sliced_by_one_line = 0;
};

namespace detail {

struct HullPoints {
  Rectangle box;          // shrunk to the rectangular hull of the covered points
  Orientation orientation;
  std::vector<std::pair<int, int>> points;  // (position, value), position order
};

// two_coord = 2 * coordinate; gridlines live at odd two_coords (half-integers).
inline bool slices_interior_v(int two_coord, const Rectangle& box) {
  return 2 * box.x1 < two_coord && two_coord < 2 * box.x2;
}
inline bool slices_interior_h(int two_coord, const Rectangle& box) {
  return 2 * box.y1 < two_coord && two_coord < 2 * box.y2;
}

}  // namespace detail

// Side-extension and propagation: every hull side becomes a gridline; each
// time a gridline slices a hull's interior, the perpendicular line separating
// that hull's points into its two monotone quadrants is emitted, recursively,
// with duplicate gridlines merged.  The cell contents of the final gridding
// define the 0/+-1 matrix.
inline PropagationResult propagate_hulls(const HullConfig& cfg) {
  const Permutation& host = cfg.host;
  const int n = host.size();
  if (n == 0) throw std::invalid_argument("hull propagation requires a nonempty host");
  if (cfg.hulls.empty()) throw std::invalid_argument("hull propagation requires hulls");
  const int m = static_cast<int>(cfg.hulls.size());

  // (H1) pairwise nonintersecting boxes
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const auto& ra = cfg.hulls[static_cast<std::size_t>(a)].box;
      const auto& rb = cfg.hulls[static_cast<std::size_t>(b)].box;
      const bool x_overlap = std::max(ra.x1, rb.x1) <= std::min(ra.x2, rb.x2);
      const bool y_overlap = std::max(ra.y1, rb.y1) <= std::min(ra.y2, rb.y2);
      if (x_overlap && y_overlap)
        throw std::invalid_argument("hulls " + std::to_string(a + 1) + " and " +
                                    std::to_string(b + 1) + " intersect (H1)");
    }

  // assign points, check coverage and monotonicity, shrink boxes
  std::vector<detail::HullPoints> hulls;
  hulls.reserve(static_cast<std::size_t>(m));
  for (const auto& h : cfg.hulls) hulls.push_back({h.box, h.orientation, {}});
  for (int i = 1; i <= n; ++i) {
    const int v = host(i);
    int owner = -1;
    for (int a = 0; a < m; ++a) {
      const auto& box = cfg.hulls[static_cast<std::size_t>(a)].box;
      if (box.x1 <= i && i <= box.x2 && box.y1 <= v && v <= box.y2) {
        owner = a;
        break;
      }
    }
    if (owner < 0)
      throw std::invalid_argument("point (" + std::to_string(i) + ", " + std::to_string(v) +
                                  ") is not covered by any hull");
    hulls[static_cast<std::size_t>(owner)].points.emplace_back(i, v);
  }
  for (int a = 0; a < m; ++a) {
    auto& h = hulls[static_cast<std::size_t>(a)];
    if (h.points.empty())
      throw std::invalid_argument("hull " + std::to_string(a + 1) + " covers no points");
    int x1 = h.points.front().first, x2 = h.points.back().first;
    int y1 = h.points.front().second, y2 = h.points.front().second;
    for (auto [x, y] : h.points) {
      y1 = std::min(y1, y);
      y2 = std::max(y2, y);
    }
    h.box = Rectangle(x1, x2, y1, y2);
    for (std::size_t i = 1; i < h.points.size(); ++i) {
      const bool up = h.points[i].second > h.points[i - 1].second;
      if (up != (h.orientation == Orientation::inc))
        throw std::invalid_argument("hull " + std::to_string(a + 1) +
                                    " is not monotone in its declared orientation");
    }
  }

  // (H3): no hull dependent both with a hull to its right and one beneath it
  for (int a = 0; a < m; ++a) {
    int right = -1, below = -1;
    for (int b = 0; b < m && (right < 0 || below < 0); ++b) {
      if (b == a) continue;
      const auto& ha = hulls[static_cast<std::size_t>(a)].box;
      const auto& hb = hulls[static_cast<std::size_t>(b)].box;
      const bool y_overlap = std::max(ha.y1, hb.y1) <= std::min(ha.y2, hb.y2);
      const bool x_overlap = std::max(ha.x1, hb.x1) <= std::min(ha.x2, hb.x2);
      if (y_overlap && hb.x1 > ha.x2) right = b;
      if (x_overlap && hb.y2 < ha.y1) below = b;
    }
    if (right >= 0 && below >= 0)
      throw std::invalid_argument("hull " + std::to_string(a + 1) +
                                  " is dependent with hull " + std::to_string(right + 1) +
                                  " to its right and hull " + std::to_string(below + 1) +
                                  " beneath it (H3)");
  }

  // all hull sides, extended
  std::set<int> vlines, hlines;
  std::deque<std::pair<bool, int>> work;  // (vertical, two_coord)
  auto push_v = [&](int tc) {
    if (vlines.insert(tc).second) work.emplace_back(true, tc);
  };
  auto push_h = [&](int tc) {
    if (hlines.insert(tc).second) work.emplace_back(false, tc);
  };
  for (const auto& h : hulls) {
    push_v(2 * h.box.x1 - 1);
    push_v(2 * h.box.x2 + 1);
    push_h(2 * h.box.y1 - 1);
    push_h(2 * h.box.y2 + 1);
  }

  while (!work.empty()) {
    auto [vertical, tc] = work.front();
    work.pop_front();
    for (const auto& h : hulls) {
      if (vertical) {
        if (!detail::slices_interior_v(tc, h.box)) continue;
        // lower group: left points for inc, right points for dec
        int max_y = 0;
        for (auto [x, y] : h.points) {
          const bool left = 2 * x < tc;
          if (left == (h.orientation == Orientation::inc)) max_y = std::max(max_y, y);
        }
        push_h(2 * max_y + 1);
      } else {
        if (!detail::slices_interior_h(tc, h.box)) continue;
        // left group: points below for inc, points above for dec
        int max_x = 0;
        for (auto [x, y] : h.points) {
          const bool below = 2 * y < tc;
          if (below == (h.orientation == Orientation::inc)) max_x = std::max(max_x, x);
        }
        push_v(2 * max_x + 1);
      }
    }
  }

  // report how many hull interiors the busiest line slices
  int max_sliced = 0;
  for (int tc : vlines) {
    int cnt = 0;
    for (const auto& h : hulls) cnt += detail::slices_interior_v(tc, h.box) ? 1 : 0;
    max_sliced = std::max(max_sliced, cnt);
  }
  for (int tc : hlines) {
    int cnt = 0;
    for (const auto& h : hulls) cnt += detail::slices_interior_h(tc, h.box) ? 1 : 0;
    max_sliced = std::max(max_sliced, cnt);
  }

  // gridding: a line at two_coord 2c+1 becomes the cut c+1
  Gridding g;
  g.col_cuts.push_back(1);
  for (int tc : vlines) {
    const int cut = (tc + 1) / 2;
    if (cut >= 1 && cut <= n + 1) g.col_cuts.push_back(cut);
  }
  g.col_cuts.push_back(n + 1);
  std::sort(g.col_cuts.begin(), g.col_cuts.end());
  g.col_cuts.erase(std::unique(g.col_cuts.begin(), g.col_cuts.end()), g.col_cuts.end());
  g.row_cuts.push_back(1);
  for (int tc : hlines) {
    const int cut = (tc + 1) / 2;
    if (cut >= 1 && cut <= n + 1) g.row_cuts.push_back(cut);
  }
  g.row_cuts.push_back(n + 1);
  std::sort(g.row_cuts.begin(), g.row_cuts.end());
  g.row_cuts.erase(std::unique(g.row_cuts.begin(), g.row_cuts.end()), g.row_cuts.end());

  const int t = static_cast<int>(g.col_cuts.size()) - 1;
  const int u = static_cast<int>(g.row_cuts.size()) - 1;
  GridMatrix matrix(t, u);
  std::vector<std::vector<std::pair<int, int>>> hull_cells(static_cast<std::size_t>(m));
  for (int k = 1; k <= t; ++k)
    for (int l = 1; l <= u; ++l) {
      int owner = -1;
      bool mixed = false;
      std::vector<int> vals;
      for (int a = 0; a < m; ++a)
        for (auto [x, y] : hulls[static_cast<std::size_t>(a)].points) {
          if (x < g.col_cuts[static_cast<std::size_t>(k - 1)] ||
              x >= g.col_cuts[static_cast<std::size_t>(k)])
            continue;
          if (y < g.row_cuts[static_cast<std::size_t>(l - 1)] ||
              y >= g.row_cuts[static_cast<std::size_t>(l)])
            continue;
          if (owner < 0) owner = a;
          if (owner != a) mixed = true;
          vals.push_back(y);
        }
      if (mixed) throw std::logic_error("propagation left two hulls sharing a cell");
      if (owner < 0) continue;
      const auto orient = hulls[static_cast<std::size_t>(owner)].orientation;
      matrix.at(k, l) = orient == Orientation::inc ? Cell::inc() : Cell::dec();
      hull_cells[static_cast<std::size_t>(owner)].emplace_back(k, l);
    }

  if (!gridding_valid(host, matrix, g))
    throw std::logic_error("propagation produced an invalid gridding");
  if (!corner_free(matrix)) throw std::logic_error("propagation matrix is not corner-free");
  for (const auto& cells : hull_cells)
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (cells[i].first == cells[j].first || cells[i].second == cells[j].second)
          throw std::logic_error("propagation left one hull with two cells sharing a row/column");

  return PropagationResult{std::move(matrix), std::move(g), max_sliced};
}

}  // namespace permgrid
