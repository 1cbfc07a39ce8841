#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

enum class CellKind { empty, inc, dec, cls };

struct Cell {
  CellKind kind = CellKind::empty;
  PatternBasis basis;  // cls cells only

  static Cell empty() { return {}; }
  static Cell inc() { return {CellKind::inc, {}}; }
  static Cell dec() { return {CellKind::dec, {}}; }
  static Cell cls(PatternBasis b) { return {CellKind::cls, std::move(b)}; }
};

// t x u matrix of cells in Cartesian coordinates: column 1 is leftmost,
// row 1 is the bottom row.  Text form lists rows top-to-bottom.
class GridMatrix {
 public:
  GridMatrix(int width, int height)
      : width_(width),
        height_(height),
        cells_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    if (width < 1 || height < 1) throw std::invalid_argument("matrix needs t >= 1 and u >= 1");
  }

  int width() const { return width_; }
  int height() const { return height_; }

  Cell& at(int col, int row) { return cells_[index(col, row)]; }
  const Cell& at(int col, int row) const { return cells_[index(col, row)]; }

  bool nonzero(int col, int row) const { return at(col, row).kind != CellKind::empty; }

  bool is_zero_pm_one() const {
    for (const auto& c : cells_)
      if (c.kind == CellKind::cls) return false;
    return true;
  }

  bool is_zero_one() const {
    for (const auto& c : cells_)
      if (c.kind == CellKind::cls || c.kind == CellKind::dec) return false;
    return true;
  }

  // Tokens: 0, 1, -1, av21 (= 1), oplus21, av(p1;p2;...).  Rows top-to-bottom,
  // separated by newlines or top-level ';', cells separated by spaces.
  static GridMatrix parse(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string tok;
    int paren = 0;
    auto flush_tok = [&] {
      if (!tok.empty()) row.push_back(std::move(tok)), tok.clear();
    };
    auto flush_row = [&] {
      flush_tok();
      if (!row.empty()) rows.push_back(std::move(row)), row.clear();
    };
    for (char c : text) {
      if (c == '(') ++paren;
      if (c == ')') --paren;
      if ((c == '\n' || c == ';') && paren == 0) {
        flush_row();
      } else if ((c == ' ' || c == '\t' || c == '\r') && paren == 0) {
        flush_tok();
      } else {
        tok.push_back(c);
      }
    }
    flush_row();
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    const int u = static_cast<int>(rows.size());
    const int t = static_cast<int>(rows[0].size());
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != t)
        throw std::invalid_argument("matrix rows must all have the same width");
    GridMatrix m(t, u);
    for (int r = 0; r < u; ++r)
      for (int k = 0; k < t; ++k)
        m.at(k + 1, u - r) = parse_cell(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]);
    return m;
  }

  std::string str() const {
    std::string out;
    for (int row = height_; row >= 1; --row) {
      for (int col = 1; col <= width_; ++col) {
        if (col > 1) out.push_back(' ');
        out += cell_token(at(col, row));
      }
      out.push_back('\n');
    }
    return out;
  }

 private:
  int width_, height_;
  std::vector<Cell> cells_;

  std::size_t index(int col, int row) const {
    if (col < 1 || col > width_ || row < 1 || row > height_)
      throw std::invalid_argument("cell index out of range");
    return static_cast<std::size_t>(row - 1) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col - 1);
  }

  static Cell parse_cell(const std::string& tok) {
    if (tok == "0") return Cell::empty();
    if (tok == "1" || tok == "av21") return Cell::inc();
    if (tok == "-1") return Cell::dec();
    if (tok == "oplus21") return Cell::cls(oplus21_basis());
    if (tok.size() > 4 && tok.substr(0, 3) == "av(" && tok.back() == ')')
      return Cell::cls(PatternBasis::parse(tok.substr(3, tok.size() - 4)));
    throw std::invalid_argument("bad matrix cell token '" + tok + "'");
  }

  static std::string cell_token(const Cell& c) {
    switch (c.kind) {
      case CellKind::empty:
        return "0";
      case CellKind::inc:
        return "1";
      case CellKind::dec:
        return "-1";
      case CellKind::cls: {
        std::string out = "av(";
        for (std::size_t i = 0; i < c.basis.patterns.size(); ++i) {
          if (i) out.push_back(';');
          out += c.basis.patterns[i].str();
        }
        out.push_back(')');
        return out;
      }
    }
    return "0";
  }
};

// Column cuts 1 = c_1 <= ... <= c_{t+1} = n+1 and row cuts likewise; the cell
// (k, l) holds the entries with position in [c_k, c_{k+1}) and value in
// [r_l, r_{l+1}).
struct Gridding {
  std::vector<int> col_cuts;
  std::vector<int> row_cuts;
};

struct CellGraph {
  std::vector<std::pair<int, int>> vertices;       // (col, row), scan order
  std::vector<std::pair<int, int>> edges;          // indices into vertices (0-based)
  bool is_forest = true;
};

// Vertices are the nonzero cells; edges join cells in a common row or column
// with no nonzero cell strictly between them.
inline CellGraph cell_graph(const GridMatrix& m) {
  CellGraph g;
  std::map<std::pair<int, int>, int> id;
  for (int col = 1; col <= m.width(); ++col)
    for (int row = 1; row <= m.height(); ++row)
      if (m.nonzero(col, row)) {
        id[{col, row}] = static_cast<int>(g.vertices.size());
        g.vertices.emplace_back(col, row);
      }
  for (int row = 1; row <= m.height(); ++row) {
    int prev = -1;
    for (int col = 1; col <= m.width(); ++col)
      if (m.nonzero(col, row)) {
        if (prev >= 0) g.edges.emplace_back(id[{prev, row}], id[{col, row}]);
        prev = col;
      }
  }
  for (int col = 1; col <= m.width(); ++col) {
    int prev = -1;
    for (int row = 1; row <= m.height(); ++row)
      if (m.nonzero(col, row)) {
        if (prev >= 0) g.edges.emplace_back(id[{col, prev}], id[{col, row}]);
        prev = row;
      }
  }
  // acyclicity via union-find
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [a, b] : g.edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) {
      g.is_forest = false;
      break;
    }
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return g;
}

inline bool is_forest(const GridMatrix& m) { return cell_graph(m).is_forest; }

namespace detail {

// Entries of p with position in [c1, c2) and value in [r1, r2), position order.
inline std::vector<int> cell_values(const Permutation& p, int c1, int c2, int r1, int r2) {
  std::vector<int> vals;
  for (int i = c1; i < c2; ++i) {
    const int v = p(i);
    if (v >= r1 && v < r2) vals.push_back(v);
  }
  return vals;
}

inline bool values_conform(const std::vector<int>& vals, const Cell& cell) {
  switch (cell.kind) {
    case CellKind::empty:
      return vals.empty();
    case CellKind::inc:
      for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i - 1] > vals[i]) return false;
      return true;
    case CellKind::dec:
      for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i - 1] < vals[i]) return false;
      return true;
    case CellKind::cls:
      return vals.empty() || cell.basis.avoided_by(pattern_of(vals));
  }
  return false;
}

}  // namespace detail

// Independent replay of a gridding: shape, boundary and monotonicity of the
// cuts, then cell-by-cell conformance.
inline bool gridding_valid(const Permutation& p, const GridMatrix& m, const Gridding& g) {
  const int n = p.size();
  if (static_cast<int>(g.col_cuts.size()) != m.width() + 1) return false;
  if (static_cast<int>(g.row_cuts.size()) != m.height() + 1) return false;
  if (g.col_cuts.front() != 1 || g.col_cuts.back() != n + 1) return false;
  if (g.row_cuts.front() != 1 || g.row_cuts.back() != n + 1) return false;
  if (!std::is_sorted(g.col_cuts.begin(), g.col_cuts.end())) return false;
  if (!std::is_sorted(g.row_cuts.begin(), g.row_cuts.end())) return false;
  for (int k = 1; k <= m.width(); ++k)
    for (int l = 1; l <= m.height(); ++l) {
      auto vals = detail::cell_values(p, g.col_cuts[static_cast<std::size_t>(k - 1)],
                                      g.col_cuts[static_cast<std::size_t>(k)],
                                      g.row_cuts[static_cast<std::size_t>(l - 1)],
                                      g.row_cuts[static_cast<std::size_t>(l)]);
      if (!detail::values_conform(vals, m.at(k, l))) return false;
    }
  return true;
}

// Exhaustive search over cut placements in lexicographic order; the first
// valid gridding is returned and re-checked before being handed out.
inline std::optional<Gridding> grid_membership(const Permutation& p, const GridMatrix& m) {
  if (p.empty()) throw std::invalid_argument("grid_membership requires a nonempty permutation");
  const int n = p.size();
  const int t = m.width(), u = m.height();

  std::vector<int> cols(static_cast<std::size_t>(t + 1), 1);
  cols.back() = n + 1;
  std::vector<int> rows(static_cast<std::size_t>(u + 1), 1);
  rows.back() = n + 1;

  // iterate interior cuts of `vec` (indices 1..count) as nondecreasing values
  auto enumerate = [&](auto&& self, std::vector<int>& vec, int idx, int count,
                       const auto& body) -> bool {
    if (idx > count) return body();
    for (int c = vec[static_cast<std::size_t>(idx - 1)]; c <= n + 1; ++c) {
      vec[static_cast<std::size_t>(idx)] = c;
      if (self(self, vec, idx + 1, count, body)) return true;
    }
    return false;
  };

  Gridding found;
  auto try_rows = [&]() -> bool {
    // prune on columns alone: every column slice must conform to some cell
    return enumerate(
        enumerate, rows, 1, u - 1, [&]() -> bool {
          for (int k = 1; k <= t; ++k)
            for (int l = 1; l <= u; ++l) {
              auto vals = detail::cell_values(p, cols[static_cast<std::size_t>(k - 1)],
                                              cols[static_cast<std::size_t>(k)],
                                              rows[static_cast<std::size_t>(l - 1)],
                                              rows[static_cast<std::size_t>(l)]);
              if (!detail::values_conform(vals, m.at(k, l))) return false;
            }
          found = Gridding{cols, rows};
          return true;
        });
  };
  if (!enumerate(enumerate, cols, 1, t - 1, try_rows)) return std::nullopt;
  if (!gridding_valid(p, m, found)) throw std::logic_error("grid_membership replay failed");
  return found;
}

// No nonzero cell with a nonzero cell below it in its column and a nonzero
// cell to its right in its row (submatrix semantics).  0/+-1 matrices only.
inline bool corner_free(const GridMatrix& m) {
  if (!m.is_zero_pm_one())
    throw std::invalid_argument("corner_free is defined for 0/+-1 matrices");
  for (int col = 1; col <= m.width(); ++col)
    for (int row = 1; row <= m.height(); ++row) {
      if (!m.nonzero(col, row)) continue;
      bool below = false, right = false;
      for (int r = 1; r < row; ++r) below = below || m.nonzero(col, r);
      for (int c = col + 1; c <= m.width(); ++c) right = right || m.nonzero(c, row);
      if (below && right) return false;
    }
  return true;
}

// Smallest t+u corner-free 0/1 matrix (ties: fewer columns) together with a
// gridding of p whose cells are all empty or increasing.
inline std::optional<std::pair<GridMatrix, Gridding>> min_corner_free_gridding(
    const Permutation& p, int dim_cap) {
  if (p.empty())
    throw std::invalid_argument("min_corner_free_gridding requires a nonempty permutation");
  const int n = p.size();
  for (int total = 2; total <= dim_cap; ++total) {
    for (int t = 1; t < total; ++t) {
      const int u = total - t;
      std::vector<int> cols(static_cast<std::size_t>(t + 1), 1);
      cols.back() = n + 1;
      std::vector<int> rows(static_cast<std::size_t>(u + 1), 1);
      rows.back() = n + 1;
      std::optional<std::pair<GridMatrix, Gridding>> hit;

      auto enumerate = [&](auto&& self, std::vector<int>& vec, int idx, int count,
                           const auto& body) -> bool {
        if (idx > count) return body();
        for (int c = vec[static_cast<std::size_t>(idx - 1)]; c <= n + 1; ++c) {
          vec[static_cast<std::size_t>(idx)] = c;
          if (self(self, vec, idx + 1, count, body)) return true;
        }
        return false;
      };
      auto check = [&]() -> bool {
        GridMatrix m(t, u);
        for (int k = 1; k <= t; ++k)
          for (int l = 1; l <= u; ++l) {
            auto vals = detail::cell_values(p, cols[static_cast<std::size_t>(k - 1)],
                                            cols[static_cast<std::size_t>(k)],
                                            rows[static_cast<std::size_t>(l - 1)],
                                            rows[static_cast<std::size_t>(l)]);
            if (!detail::values_conform(vals, Cell::inc())) return false;
            if (!vals.empty()) m.at(k, l) = Cell::inc();
          }
        if (!corner_free(m)) return false;
        hit = {std::move(m), Gridding{cols, rows}};
        return true;
      };
      auto rows_pass = [&]() -> bool { return enumerate(enumerate, rows, 1, u - 1, check); };
      if (enumerate(enumerate, cols, 1, t - 1, rows_pass)) return hit;
    }
  }
  return std::nullopt;
}

}  // namespace permgrid
