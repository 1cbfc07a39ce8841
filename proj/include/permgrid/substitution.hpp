#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

enum class NodeKind { leaf, sum, skew, simple };

// Substitution decomposition tree.  Sum/skew nodes are flat n-ary splits into
// indecomposable parts; simple nodes carry a nonmonotone simple skeleton of
// length >= 4 with one child per skeleton entry, ordered by position.
struct DecompositionTree {
  NodeKind kind = NodeKind::leaf;
  Permutation skeleton;  // simple nodes only
  std::vector<DecompositionTree> children;
};

inline DecompositionTree leaf_node() { return DecompositionTree{}; }

inline int height(const DecompositionTree& t) {
  int h = 0;
  for (const auto& c : t.children) h = std::max(h, height(c) + 1);
  return h;
}

namespace detail {

inline Permutation slice_pattern(const Permutation& p, int a, int b) {
  std::vector<int> vals;
  vals.reserve(static_cast<std::size_t>(b - a + 1));
  for (int i = a; i <= b; ++i) vals.push_back(p(i));
  return pattern_of(vals);
}

// Positions i < n after which the prefix is {1..i} (sum) or {n-i+1..n} (skew).
inline std::vector<int> sum_breakpoints(const Permutation& p) {
  std::vector<int> cuts;
  int mx = 0;
  for (int i = 1; i < p.size(); ++i) {
    mx = std::max(mx, p(i));
    if (mx == i) cuts.push_back(i);
  }
  return cuts;
}

inline std::vector<int> skew_breakpoints(const Permutation& p) {
  std::vector<int> cuts;
  const int n = p.size();
  int mn = n + 1;
  for (int i = 1; i < n; ++i) {
    mn = std::min(mn, p(i));
    if (mn == n - i + 1) cuts.push_back(i);
  }
  return cuts;
}

}  // namespace detail

inline DecompositionTree decompose(const Permutation& p);

namespace detail {

inline DecompositionTree decompose_parts(const Permutation& p, const std::vector<int>& cuts,
                                         NodeKind kind) {
  DecompositionTree node;
  node.kind = kind;
  int start = 1;
  for (int cut : cuts) {
    node.children.push_back(decompose(slice_pattern(p, start, cut)));
    start = cut + 1;
  }
  node.children.push_back(decompose(slice_pattern(p, start, p.size())));
  return node;
}

}  // namespace detail

// Canonical substitution decomposition: maximal flat sum/skew split when the
// permutation is sum/skew decomposable, otherwise the unique inflation of a
// simple permutation of length >= 4 whose blocks are the maximal proper
// intervals.
inline DecompositionTree decompose(const Permutation& p) {
  if (p.empty()) throw std::invalid_argument("decompose requires a nonempty permutation");
  const int n = p.size();
  if (n == 1) return leaf_node();

  if (auto cuts = detail::sum_breakpoints(p); !cuts.empty())
    return detail::decompose_parts(p, cuts, NodeKind::sum);
  if (auto cuts = detail::skew_breakpoints(p); !cuts.empty())
    return detail::decompose_parts(p, cuts, NodeKind::skew);

  // Simple quotient: blocks are the maximal proper intervals, which are
  // pairwise disjoint here because the quotient has length >= 4.
  auto proper = proper_intervals(p);
  std::vector<std::pair<int, int>> maximal;
  for (const auto& iv : proper) {
    bool covered = false;
    for (const auto& other : proper)
      if (other != iv && other.first <= iv.first && iv.second <= other.second) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(iv);
  }
  std::sort(maximal.begin(), maximal.end());
  for (std::size_t i = 1; i < maximal.size(); ++i)
    if (maximal[i].first <= maximal[i - 1].second)
      throw std::logic_error("maximal proper intervals overlap in simple-quotient branch");

  std::vector<std::pair<int, int>> blocks;
  int pos = 1;
  for (const auto& iv : maximal) {
    while (pos < iv.first) blocks.emplace_back(pos, pos), ++pos;
    blocks.push_back(iv);
    pos = iv.second + 1;
  }
  while (pos <= n) blocks.emplace_back(pos, pos), ++pos;

  std::vector<int> representatives;
  representatives.reserve(blocks.size());
  for (const auto& b : blocks) representatives.push_back(p(b.first));

  DecompositionTree node;
  node.kind = NodeKind::simple;
  node.skeleton = pattern_of(representatives);
  if (node.skeleton.size() < 4 || !is_simple(node.skeleton))
    throw std::logic_error("simple-quotient branch produced a non-simple skeleton");
  for (const auto& b : blocks)
    node.children.push_back(decompose(detail::slice_pattern(p, b.first, b.second)));
  return node;
}

// Inverse of decompose.  Validates the tree invariants and throws
// std::invalid_argument on violations.
inline Permutation reconstruct(const DecompositionTree& t) {
  switch (t.kind) {
    case NodeKind::leaf:
      if (!t.children.empty()) throw std::invalid_argument("leaf node with children");
      return Permutation({1});
    case NodeKind::sum:
    case NodeKind::skew: {
      if (t.children.size() < 2)
        throw std::invalid_argument("sum/skew node needs at least two children");
      for (const auto& c : t.children)
        if (c.kind == t.kind)
          throw std::invalid_argument("sum/skew node has a child of the same kind");
      std::vector<Permutation> parts;
      parts.reserve(t.children.size());
      for (const auto& c : t.children) parts.push_back(reconstruct(c));
      return combine_all(parts, t.kind == NodeKind::sum ? CombineMode::sum : CombineMode::skew);
    }
    case NodeKind::simple: {
      if (t.skeleton.size() < 4 || !is_simple(t.skeleton))
        throw std::invalid_argument("simple node skeleton must be simple of length >= 4");
      if (static_cast<int>(t.children.size()) != t.skeleton.size())
        throw std::invalid_argument("simple node needs one child per skeleton entry");
      std::vector<Permutation> parts;
      parts.reserve(t.children.size());
      for (const auto& c : t.children) parts.push_back(reconstruct(c));
      return inflate(t.skeleton, parts);
    }
  }
  throw std::invalid_argument("corrupt decomposition tree");
}

// Height of the canonical tree: 0 for the singleton, 1 for simple and
// monotone permutations of length >= 2.
inline int substitution_depth(const Permutation& p) { return height(decompose(p)); }

namespace detail {

inline std::string monotone_token(int m, bool increasing) {
  Permutation p = increasing ? Permutation::identity(m) : Permutation::decreasing(m);
  return m <= 9 ? p.compact() : p.str();
}

}  // namespace detail

// Nested functional notation, e.g. "2413[1,3142[1,1,12,1],21,1]".  Sum/skew
// nodes whose children are all leaves render as their monotone permutation.
inline std::string to_string(const DecompositionTree& t) {
  switch (t.kind) {
    case NodeKind::leaf:
      return "1";
    case NodeKind::sum:
    case NodeKind::skew: {
      const int m = static_cast<int>(t.children.size());
      bool all_leaves = true;
      for (const auto& c : t.children)
        if (c.kind != NodeKind::leaf) all_leaves = false;
      std::string skel = detail::monotone_token(m, t.kind == NodeKind::sum);
      if (all_leaves) return skel;
      std::string out = skel + "[";
      for (int i = 0; i < m; ++i) {
        if (i) out.push_back(',');
        out += to_string(t.children[static_cast<std::size_t>(i)]);
      }
      out.push_back(']');
      return out;
    }
    case NodeKind::simple: {
      std::string out =
          t.skeleton.size() <= 9 ? t.skeleton.compact() : t.skeleton.str();
      out.push_back('[');
      for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out.push_back(',');
        out += to_string(t.children[i]);
      }
      out.push_back(']');
      return out;
    }
  }
  throw std::invalid_argument("corrupt decomposition tree");
}

}  // namespace permgrid
