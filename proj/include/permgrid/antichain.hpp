#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgrid/graph.hpp"
#include "permgrid/grid.hpp"
#include "permgrid/permutation.hpp"

namespace permgrid {

// Three independent sets U, V, W of size n.  U-V is a chain graph (u_i sees
// the first i vertices of V, neighbourhoods nested), U-W is a chain graph
// ordered by the permutation (u_{pi(i)} sees the first i vertices of W), and
// V-W is complete bipartite.  Vertices: U = 1..n, V = n+1..2n, W = 2n+1..3n.
inline Graph ding_graph(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("ding_graph requires a nonempty permutation");
  if (3 * n > Graph::max_vertices) throw std::domain_error("ding_graph host is limited to 21 entries");
  Graph g(3 * n);
  std::vector<std::string> labels(static_cast<std::size_t>(3 * n));
  for (int i = 1; i <= n; ++i) {
    labels[static_cast<std::size_t>(i - 1)] = "U";
    labels[static_cast<std::size_t>(n + i - 1)] = "V";
    labels[static_cast<std::size_t>(2 * n + i - 1)] = "W";
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) g.add_edge(i, n + j);          // u_i ~ v_1..v_i
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) g.add_edge(p(i), 2 * n + j);   // u_{pi(i)} ~ w_1..w_i
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l) g.add_edge(n + j, 2 * n + l);  // V-W complete
  g.set_labels(std::move(labels));
  return g;
}

// Vertex-split variant: every u is split into u^(1) (keeping the V side) and
// u^(2) (keeping the W side) joined by a matching edge.  Vertices:
// U1 = 1..n, U2 = n+1..2n, V = 2n+1..3n, W = 3n+1..4n.
inline Graph split_graph(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("split_graph requires a nonempty permutation");
  if (4 * n > Graph::max_vertices) throw std::domain_error("split_graph host is limited to 16 entries");
  Graph g(4 * n);
  std::vector<std::string> labels(static_cast<std::size_t>(4 * n));
  for (int i = 1; i <= n; ++i) {
    labels[static_cast<std::size_t>(i - 1)] = "U1";
    labels[static_cast<std::size_t>(n + i - 1)] = "U2";
    labels[static_cast<std::size_t>(2 * n + i - 1)] = "V";
    labels[static_cast<std::size_t>(3 * n + i - 1)] = "W";
  }
  for (int i = 1; i <= n; ++i) g.add_edge(i, n + i);                // matching
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) g.add_edge(i, 2 * n + j);          // u1_i ~ v_1..v_i
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) g.add_edge(n + p(i), 3 * n + j);   // u2_{pi(i)} ~ w_1..w_i
  for (int j = 1; j <= n; ++j)
    for (int l = 1; l <= n; ++l) g.add_edge(2 * n + j, 3 * n + l);  // V-W complete
  g.set_labels(std::move(labels));
  return g;
}

// The increasing oscillation of length m: 2 4 1 6 3 8 5 ...; its inversion
// graph is the path P_m.
inline Permutation increasing_oscillation(int m) {
  if (m < 1) throw std::invalid_argument("oscillation length must be >= 1");
  if (m == 1) return Permutation({1});
  std::vector<int> v(static_cast<std::size_t>(m));
  v[0] = 2;
  for (int p = 2; p <= m; ++p) {
    int val;
    if (p % 2 == 0)
      val = (p + 2 <= m) ? p + 2 : (m % 2 == 1 ? m : m - 1);
    else
      val = p - 2;
    v[static_cast<std::size_t>(p - 1)] = val;
  }
  return Permutation(std::move(v));
}

enum class Family { ding, split, parallel, hook, monotone_grid, increasing_osc };

struct FamilyId {
  Family kind;
  int index = 1;
};

inline Family parse_family(std::string_view name) {
  if (name == "ding") return Family::ding;
  if (name == "split") return Family::split;
  if (name == "parallel") return Family::parallel;
  if (name == "hook") return Family::hook;
  if (name == "monogrid") return Family::monotone_grid;
  if (name == "incosc") return Family::increasing_osc;
  throw std::invalid_argument("unknown antichain family '" + std::string(name) + "'");
}

namespace detail {

// k-th element of the parallel antichain: length 4k+8, two side-by-side
// oscillating columns with a 21 pair anchored at each end.
inline Permutation parallel_element(int k) {
  const int m = k + 2;
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(4 * m));
  v.push_back(3);
  v.push_back(2);
  for (int j = 2; j <= m - 1; ++j) {
    v.push_back(4 * j - 1);
    v.push_back(4 * j - 4);
  }
  v.push_back(4 * m);
  v.push_back(4 * m - 4);
  v.push_back(5);
  v.push_back(1);
  for (int j = 2; j <= m - 1; ++j) {
    v.push_back(4 * j + 1);
    v.push_back(4 * j - 2);
  }
  v.push_back(4 * m - 1);
  v.push_back(4 * m - 2);
  return Permutation(std::move(v));
}

// k-th element of the hook antichain: length 6k+5.
inline Permutation hook_element(int k) {
  const int b = 2 * k + 2;
  const int n = 6 * k + 5;
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= k; ++j) {
    v.push_back(b + 4 * j);
    v.push_back(b + 4 * j - 3);
  }
  v.push_back(b + 4 * k + 2);
  v.push_back(b + 4 * k + 1);
  v.push_back(b + 2);
  v.push_back(2);
  v.push_back(1);
  for (int j = 1; j <= k; ++j) {
    v.push_back(2 * j + 2);
    v.push_back(b + 4 * j - 1);
    v.push_back(j < k ? b + 4 * j + 2 : n);
    v.push_back(2 * j + 1);
  }
  return Permutation(std::move(v));
}

// k-th element of the antichain inside the 2x2 all-increasing grid class: an
// oscillation wound once around the four cells per unit, with the two end
// units doubled into the only proper intervals.
inline Permutation monotone_grid_element(int k);

// k-th element of the increasing oscillating antichain: an oscillation with
// both extremal entries doubled into 21 pairs.
inline Permutation increasing_osc_element(int k);

}  // namespace detail

inline Permutation antichain_element(FamilyId id) {
  if (id.index < 1) throw std::invalid_argument("antichain element index must be >= 1");
  switch (id.kind) {
    case Family::parallel:
      return detail::parallel_element(id.index);
    case Family::hook:
      return detail::hook_element(id.index);
    case Family::monotone_grid:
      return detail::monotone_grid_element(id.index);
    case Family::increasing_osc:
      return detail::increasing_osc_element(id.index);
    case Family::ding:
    case Family::split:
      throw std::invalid_argument("ding/split are graph encodings; use ding_graph/split_graph");
  }
  throw std::invalid_argument("unknown antichain family");
}

inline std::vector<Permutation> antichain_prefix(Family kind, int count) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 1; k <= count; ++k) out.push_back(antichain_element({kind, k}));
  return out;
}

// Verdict for one ordered pair of elements (1-based indices).
struct PairVerdict {
  int first = 0, second = 0;
  bool contained = false;       // first element (or a symmetry of it) embeds in second
  std::string detail;           // "incomparable" or a description of the violation
  std::vector<int> witness;     // embedding indices / vertex map when contained
};

struct AntichainReport {
  std::vector<Permutation> elements;
  std::vector<std::string> element_notes;
  std::vector<PairVerdict> pairs;  // every ordered pair (i, j), i != j
  bool antichain = true;
};

// Pairwise pattern containment in both directions.
inline AntichainReport verify_perm_antichain(const std::vector<Permutation>& elems) {
  if (elems.empty()) throw std::invalid_argument("verify_perm_antichain needs elements");
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (elems[i] == elems[j]) throw std::invalid_argument("elements must be pairwise distinct");
  AntichainReport report;
  report.elements = elems;
  const int n = static_cast<int>(elems.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      PairVerdict v;
      v.first = i + 1;
      v.second = j + 1;
      if (auto emb = contains(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)])) {
        v.contained = true;
        v.witness = emb->indices;
        v.detail = "element " + std::to_string(i + 1) + " embeds in element " + std::to_string(j + 1);
        report.antichain = false;
      } else {
        v.detail = "incomparable";
      }
      report.pairs.push_back(std::move(v));
    }
  return report;
}

enum class GraphMode { direct, symmetry };

namespace detail {

inline const char* symmetry_name(int s) {
  switch (s) {
    case 0: return "identity";
    case 1: return "inverse";
    case 2: return "reverse-complement";
    default: return "inverse-reverse-complement";
  }
}

}  // namespace detail

// Graph-antichain verification on the inversion graphs of the elements.
//
// direct: exact induced-subgraph checks between every ordered pair of graphs
// (vertex budget capped).  symmetry: sound shortcut available when every
// element's only proper intervals are two 21 pairs, which pins Perms(G) to
// the four-element symmetry orbit; it then suffices that no symmetry of one
// element embeds in another as a permutation.
inline AntichainReport verify_graph_antichain(const std::vector<Permutation>& elems,
                                              GraphMode mode, int budget = 24) {
  if (elems.empty()) throw std::invalid_argument("verify_graph_antichain needs elements");
  AntichainReport report;
  report.elements = elems;
  const int n = static_cast<int>(elems.size());

  if (mode == GraphMode::direct) {
    std::vector<Graph> graphs;
    for (const auto& e : elems) {
      if (e.size() > budget)
        throw std::domain_error("direct mode budget exceeded: element of length " +
                                std::to_string(e.size()) + " > " + std::to_string(budget));
      graphs.push_back(graph_of(e));
      report.element_notes.push_back("graph on " + std::to_string(e.size()) + " vertices");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        PairVerdict v;
        v.first = i + 1;
        v.second = j + 1;
        if (auto map = induced_contains(graphs[static_cast<std::size_t>(j)],
                                        graphs[static_cast<std::size_t>(i)])) {
          v.contained = true;
          v.witness = *map;
          v.detail = "graph of element " + std::to_string(i + 1) +
                     " is an induced subgraph of the graph of element " + std::to_string(j + 1);
          report.antichain = false;
        } else {
          v.detail = "incomparable";
        }
        report.pairs.push_back(std::move(v));
      }
    return report;
  }

  // symmetry mode precondition: exactly two proper intervals, both 21 pairs
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& e = elems[i];
    auto props = proper_intervals(e);
    if (props.size() != 2)
      throw std::domain_error("symmetry mode needs exactly two proper intervals; element " +
                              std::to_string(i + 1) + " has " + std::to_string(props.size()));
    std::string note = "proper intervals:";
    for (auto [a, b] : props) {
      if (b - a + 1 != 2 || e(a) != e(b) + 1)
        throw std::domain_error("symmetry mode needs 21-pair intervals; element " +
                                std::to_string(i + 1) + " fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
      note += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    report.element_notes.push_back(std::move(note));
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      PairVerdict v;
      v.first = i + 1;
      v.second = j + 1;
      const Permutation sym[4] = {
          elems[static_cast<std::size_t>(i)],
          symmetry(elems[static_cast<std::size_t>(i)], Symmetry::inverse),
          symmetry(elems[static_cast<std::size_t>(i)], Symmetry::reverse_complement),
          symmetry(elems[static_cast<std::size_t>(i)], Symmetry::inverse_reverse_complement),
      };
      for (int s = 0; s < 4 && !v.contained; ++s) {
        if (auto emb = contains(sym[s], elems[static_cast<std::size_t>(j)])) {
          v.contained = true;
          v.witness = emb->indices;
          v.detail = std::string(detail::symmetry_name(s)) + " of element " +
                     std::to_string(i + 1) + " embeds in element " + std::to_string(j + 1);
          report.antichain = false;
        }
      }
      if (!v.contained) v.detail = "incomparable";
      report.pairs.push_back(std::move(v));
    }
  return report;
}

// The generalised gridding matrices the drawn families live in.
inline GridMatrix parallel_family_matrix() { return GridMatrix::parse("oplus21 oplus21"); }
inline GridMatrix hook_family_matrix() { return GridMatrix::parse("oplus21 av21\n0 oplus21"); }
inline GridMatrix monotone_grid_family_matrix() { return GridMatrix::parse("1 1\n1 1"); }

}  // namespace permgrid

#include "permgrid/antichain_families.hpp"
