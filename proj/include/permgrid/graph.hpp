#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

// Finite simple graph on vertices 1..n, adjacency stored as bit rows.
// Optional per-vertex labels carry part tags of constructions; they are
// ignored by isomorphism and containment.
class Graph {
 public:
  static constexpr int max_vertices = 64;

  explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > max_vertices)
      throw std::domain_error("graph size out of range (0.." +
                              std::to_string(max_vertices) + ")");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[static_cast<std::size_t>(u - 1)] |= bit(v);
    adj_[static_cast<std::size_t>(v - 1)] |= bit(u);
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u - 1)] & bit(v)) != 0;
  }

  std::uint64_t neighbours_mask(int u) const { return adj_[static_cast<std::size_t>(u - 1)]; }

  int size() const { return n_; }

  int degree(int u) const { return std::popcount(adj_[static_cast<std::size_t>(u - 1)]); }

  long long edge_count() const {
    long long total = 0;
    for (const auto row : adj_) total += std::popcount(row);
    return total / 2;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    d.reserve(static_cast<std::size_t>(n_));
    for (int u = 1; u <= n_; ++u) d.push_back(degree(u));
    std::sort(d.begin(), d.end());
    return d;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
      throw std::invalid_argument("label count must match vertex count");
    labels_ = std::move(labels);
  }

  const std::vector<std::string>& labels() const { return labels_; }

  // Text format: first line "n", then one edge "i j" per line, sorted.
  std::string str() const {
    std::string out = std::to_string(n_) + "\n";
    for (auto [u, v] : edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
  }

  static Graph parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0, n = -1;
    std::vector<std::pair<int, int>> edge_list;
    auto fail = [&](const std::string& what, std::size_t column) {
      throw std::invalid_argument("graph parse error at line " + std::to_string(line_no) +
                                  ", column " + std::to_string(column + 1) + ": " + what);
    };
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream fields(line);
      std::string rest;
      if (n < 0) {
        if (!(fields >> n) || n < 0) fail("expected the vertex count", 0);
        if (fields >> rest) fail("trailing junk after the vertex count", line.find(rest));
        continue;
      }
      int u = 0, v = 0;
      if (!(fields >> u >> v)) fail("expected an edge 'i j'", 0);
      if (fields >> rest) fail("trailing junk after the edge", line.find(rest));
      if (u < 1 || u > n || v < 1 || v > n || u == v) fail("bad edge endpoints", 0);
      edge_list.emplace_back(u, v);
    }
    if (n < 0) throw std::invalid_argument("graph text must start with the vertex count");
    return from_edges(n, edge_list);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> labels_;

  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

  void check_vertex(int u) const {
    if (u < 1 || u > n_) throw std::invalid_argument("vertex out of range");
  }
};

// The inversion graph G_pi: i adjacent to j when i <= j and pi(i) >= pi(j).
inline Graph graph_of(const Permutation& p) {
  const int n = p.size();
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p(i) > p(j)) g.add_edge(i, j);
  return g;
}

enum class NamedGraph { path, clique, edgeless };

inline Graph build_named(NamedGraph kind, int n) {
  if (n < 1) throw std::invalid_argument("named graphs need n >= 1");
  Graph g(n);
  switch (kind) {
    case NamedGraph::path:
      for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
      break;
    case NamedGraph::clique:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
      break;
    case NamedGraph::edgeless:
      break;
  }
  return g;
}

// Induced subgraph containment: a map pattern vertex -> host vertex preserving
// both edges and non-edges, or nullopt.  Pattern vertices are assigned in
// descending-degree order with ascending host candidates, so the witness is
// deterministic.
inline std::optional<std::vector<int>> induced_contains(const Graph& host, const Graph& pattern) {
  const int k = pattern.size();
  const int n = host.size();
  if (k > n) return std::nullopt;
  if (k == 0) return std::vector<int>{};

  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pattern.degree(a) != pattern.degree(b)) return pattern.degree(a) > pattern.degree(b);
    return a < b;
  });

  const std::uint64_t all_hosts = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::vector<std::uint64_t> candidates(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    std::uint64_t mask = 0;
    const int u = order[static_cast<std::size_t>(t)];
    for (int v = 1; v <= n; ++v)
      if (host.degree(v) >= pattern.degree(u)) mask |= std::uint64_t{1} << (v - 1);
    candidates[static_cast<std::size_t>(t)] = mask;
  }

  std::vector<int> assignment(static_cast<std::size_t>(k), 0);  // order slot -> host vertex
  auto rec = [&](auto&& self, int t, std::vector<std::uint64_t> cand, std::uint64_t used) -> bool {
    if (t == k) return true;
    const int u = order[static_cast<std::size_t>(t)];
    std::uint64_t avail = cand[static_cast<std::size_t>(t)] & ~used & all_hosts;
    while (avail) {
      const int v = std::countr_zero(avail) + 1;
      avail &= avail - 1;
      // forward-check later slots against the adjacency requirement to u
      std::vector<std::uint64_t> next = cand;
      bool dead = false;
      for (int s = t + 1; s < k; ++s) {
        const int w = order[static_cast<std::size_t>(s)];
        if (pattern.adjacent(u, w))
          next[static_cast<std::size_t>(s)] &= host.neighbours_mask(v);
        else
          next[static_cast<std::size_t>(s)] &= ~host.neighbours_mask(v);
        next[static_cast<std::size_t>(s)] &= ~(std::uint64_t{1} << (v - 1));
        if ((next[static_cast<std::size_t>(s)] & ~used) == 0) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      assignment[static_cast<std::size_t>(t)] = v;
      if (self(self, t + 1, std::move(next), used | (std::uint64_t{1} << (v - 1)))) return true;
    }
    return false;
  };
  if (!rec(rec, 0, candidates, 0)) return std::nullopt;

  std::vector<int> mapping(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t)
    mapping[static_cast<std::size_t>(order[static_cast<std::size_t>(t)] - 1)] =
        assignment[static_cast<std::size_t>(t)];
  return mapping;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return induced_contains(b, a).has_value();
}

// True when the graph has a clique of at least `size` vertices.
inline bool has_clique(const Graph& g, int size) {
  if (size <= 0) return true;
  const int n = g.size();
  if (size > n) return false;
  auto rec = [&](auto&& self, std::uint64_t cand, int need) -> bool {
    if (need == 0) return true;
    if (std::popcount(cand) < need) return false;
    while (cand) {
      const int v = std::countr_zero(cand) + 1;
      cand &= cand - 1;
      if (self(self, cand & g.neighbours_mask(v), need - 1)) return true;
    }
    return false;
  };
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return rec(rec, all, size);
}

struct ForbiddenPair {
  int path_len;    // k of P_k
  int clique_size; // l of K_l
};

// True when G contains neither an induced P_k nor a K_l.
inline bool omits(const Graph& g, ForbiddenPair pair) {
  if (pair.path_len < 1 || pair.clique_size < 1)
    throw std::invalid_argument("forbidden pair sizes must be >= 1");
  if (has_clique(g, pair.clique_size)) return false;
  return !induced_contains(g, build_named(NamedGraph::path, pair.path_len)).has_value();
}

// All modules of size >= 2 and < n, by subset enumeration (desk scale; n <= 16).
inline std::vector<std::vector<int>> graph_modules(const Graph& g) {
  const int n = g.size();
  if (n > 16) throw std::domain_error("graph_modules is limited to 16 vertices");
  std::vector<std::vector<int>> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t set = 3; set < limit; ++set) {
    const int sz = std::popcount(set);
    if (sz < 2 || sz >= n) continue;
    bool ok = true;
    for (int w = 1; w <= n && ok; ++w) {
      if (set & (std::uint64_t{1} << (w - 1))) continue;
      const std::uint64_t hit = g.neighbours_mask(w) & set;
      if (hit != 0 && hit != set) ok = false;
    }
    if (!ok) continue;
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v)
      if (set & (std::uint64_t{1} << (v - 1))) verts.push_back(v);
    out.push_back(std::move(verts));
  }
  return out;
}

inline bool is_prime(const Graph& g) { return graph_modules(g).empty(); }

// Perms(G): all permutations pi with G_pi isomorphic to G, by scanning all
// |V(G)|! candidates.  Both |V(G)| and the cap are limited to 9.
inline std::vector<Permutation> perms_of_graph(const Graph& g, int length_cap = 9) {
  const int n = g.size();
  if (length_cap > 9) throw std::domain_error("perms_of_graph cap is limited to 9");
  if (n > length_cap) throw std::domain_error("graph exceeds the perms_of_graph cap");
  const auto want_degrees = g.degree_sequence();
  const auto want_edges = g.edge_count();
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    Permutation p{std::vector<int>(v)};
    Graph gp = graph_of(p);
    if (gp.edge_count() != want_edges) continue;
    if (gp.degree_sequence() != want_degrees) continue;
    if (induced_contains(g, gp).has_value()) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Minimal adjacency bitstring over all relabellings; usable as an isomorphism
// class key for n <= 8.
inline std::string canonical_key(const Graph& g) {
  const int n = g.size();
  if (n > 8) throw std::domain_error("canonical_key is limited to 8 vertices");
  std::vector<int> relabel(static_cast<std::size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 1);
  std::string best;
  do {
    std::string key;
    key.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        key.push_back(g.adjacent(relabel[static_cast<std::size_t>(i - 1)],
                                 relabel[static_cast<std::size_t>(j - 1)])
                          ? '1'
                          : '0');
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(relabel.begin(), relabel.end()));
  return std::to_string(n) + ":" + best;
}

}  // namespace permgrid
