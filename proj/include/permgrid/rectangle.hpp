#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace permgrid {

// Closed axis-parallel rectangle [x1,x2] x [y1,y2] with integer endpoints in
// plot coordinates.
struct Rectangle {
  int x1, x2, y1, y2;

  Rectangle(int x1_, int x2_, int y1_, int y2_) : x1(x1_), x2(x2_), y1(y1_), y2(y2_) {
    if (x1 > x2 || y1 > y2) throw std::invalid_argument("rectangle endpoints out of order");
  }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

// Dependent: the projections onto the x- or the y-axis intersect.
inline bool dependent(const Rectangle& a, const Rectangle& b) {
  const bool x_overlap = std::max(a.x1, b.x1) <= std::min(a.x2, b.x2);
  const bool y_overlap = std::max(a.y1, b.y1) <= std::min(a.y2, b.y2);
  return x_overlap || y_overlap;
}

inline bool independent(const Rectangle& a, const Rectangle& b) { return !dependent(a, b); }

// Maximum pairwise-independent subset, exhaustively with a simple bound prune.
// Returns the size and the 0-based indices of one maximum witness.
inline std::pair<int, std::vector<int>> max_independent_rectangles(
    const std::vector<Rectangle>& rects) {
  if (rects.empty()) throw std::invalid_argument("max_independent_rectangles needs input");
  const int n = static_cast<int>(rects.size());
  std::vector<int> chosen, best;
  auto rec = [&](auto&& self, int i) -> void {
    if (static_cast<int>(chosen.size()) + (n - i) <= static_cast<int>(best.size())) return;
    if (i == n) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    bool ok = true;
    for (int j : chosen)
      if (dependent(rects[static_cast<std::size_t>(j)], rects[static_cast<std::size_t>(i)]))
        ok = false;
    if (ok) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
    self(self, i + 1);
  };
  rec(rec, 0);
  return {static_cast<int>(best.size()), best};
}

// An axis-parallel line; `vertical` lines have x == coord.
struct SliceLine {
  bool vertical;
  int coord;

  friend bool operator==(const SliceLine&, const SliceLine&) = default;
  friend bool operator<(const SliceLine& a, const SliceLine& b) {
    if (a.vertical != b.vertical) return a.vertical > b.vertical;  // verticals first
    return a.coord < b.coord;
  }
};

inline bool slices(const SliceLine& line, const Rectangle& r) {
  return line.vertical ? (r.x1 <= line.coord && line.coord <= r.x2)
                       : (r.y1 <= line.coord && line.coord <= r.y2);
}

// Minimum-cardinality set of axis-parallel lines meeting every rectangle.
// Candidate coordinates at rectangle edges suffice: any slicing line can be
// slid onto an edge without unslicing anything.  Capped at 12 rectangles.
inline std::vector<SliceLine> min_slicing_lines(const std::vector<Rectangle>& rects) {
  if (rects.empty()) throw std::invalid_argument("min_slicing_lines needs input");
  if (rects.size() > 12) throw std::domain_error("min_slicing_lines is limited to 12 rectangles");

  std::vector<SliceLine> candidates;
  for (const auto& r : rects) {
    candidates.push_back({true, r.x1});
    candidates.push_back({true, r.x2});
    candidates.push_back({false, r.y1});
    candidates.push_back({false, r.y2});
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const int n = static_cast<int>(rects.size());
  std::vector<SliceLine> chosen;
  std::vector<SliceLine> best;
  bool have_best = false;

  auto first_unsliced = [&]() {
    for (int i = 0; i < n; ++i) {
      bool hit = false;
      for (const auto& line : chosen)
        if (slices(line, rects[static_cast<std::size_t>(i)])) hit = true;
      if (!hit) return i;
    }
    return -1;
  };
  auto rec = [&](auto&& self) -> void {
    if (have_best && chosen.size() >= best.size()) return;
    const int i = first_unsliced();
    if (i < 0) {
      best = chosen;
      have_best = true;
      return;
    }
    for (const auto& line : candidates) {
      if (!slices(line, rects[static_cast<std::size_t>(i)])) continue;
      chosen.push_back(line);
      self(self);
      chosen.pop_back();
    }
  };
  rec(rec);
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace permgrid
