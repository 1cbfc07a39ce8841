#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permgrid {

// A permutation in one-line notation, 1-indexed: operator()(i) is the value at
// position i.  Immutable after construction.  The plot view is the point set
// {(i, pi(i))} in Cartesian coordinates.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  static Permutation decreasing(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
  }

  // Accepts whitespace-separated one-line notation ("2 4 1 5 3") or, for a
  // single all-digit token of length >= 2, the compact form ("24153"); compact
  // input is rejected for n >= 10.
  static Permutation parse(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
        if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
      } else {
        current.push_back(c);
      }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    if (tokens.empty()) throw std::invalid_argument("empty permutation text");

    std::vector<int> vals;
    if (tokens.size() == 1 && tokens[0].size() >= 2 &&
        std::all_of(tokens[0].begin(), tokens[0].end(), [](char c) { return c >= '0' && c <= '9'; })) {
      if (tokens[0].size() >= 10)
        throw std::invalid_argument("compact permutation form is only accepted for n <= 9");
      for (char c : tokens[0]) vals.push_back(c - '0');
    } else {
      for (const auto& t : tokens) {
        std::size_t used = 0;
        int v = 0;
        try {
          v = std::stoi(t, &used);
        } catch (const std::exception&) {
          throw std::invalid_argument("bad permutation token '" + t + "'");
        }
        if (used != t.size()) throw std::invalid_argument("bad permutation token '" + t + "'");
        vals.push_back(v);
      }
    }
    return Permutation(std::move(vals));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  int operator()(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }

  const std::vector<int>& entries() const { return entries_; }

  int position_of(int value) const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) == value) return i;
    throw std::invalid_argument("value not present in permutation");
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(entries_[static_cast<std::size_t>(i)]);
    }
    return out;
  }

  std::string compact() const {
    if (size() >= 10) throw std::invalid_argument("compact form is only defined for n <= 9");
    std::string out;
    for (int v : entries_) out.push_back(static_cast<char>('0' + v));
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

  // Total order: by length, then lexicographic on entries.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<int> entries_;

  void validate() const {
    const int n = size();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : entries_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("entries are not a bijection on {1..n}");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
};

// The pattern of an arbitrary sequence of distinct values: ranks mapped to 1..k.
inline Permutation pattern_of(const std::vector<int>& values) {
  std::vector<int> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
                                sorted.begin()) +
               1;
  }
  return Permutation(std::move(ranks));
}

// A witnessing occurrence of a pattern: strictly increasing 1-based host positions.
struct Embedding {
  std::vector<int> indices;
};

namespace detail {

// For each pattern index t, the earlier index holding the closest value below /
// above pattern[t] (-1 when none).  Reduces the order-isomorphism test for a
// candidate to two comparisons.
inline void pred_succ(const std::vector<int>& p, std::vector<int>& pred, std::vector<int>& succ) {
  const int k = static_cast<int>(p.size());
  pred.assign(static_cast<std::size_t>(k), -1);
  succ.assign(static_cast<std::size_t>(k), -1);
  for (int t = 0; t < k; ++t) {
    int best_lo = 0, best_hi = k + 1;
    for (int s = 0; s < t; ++s) {
      if (p[static_cast<std::size_t>(s)] < p[static_cast<std::size_t>(t)] &&
          p[static_cast<std::size_t>(s)] > best_lo) {
        best_lo = p[static_cast<std::size_t>(s)];
        pred[static_cast<std::size_t>(t)] = s;
      }
      if (p[static_cast<std::size_t>(s)] > p[static_cast<std::size_t>(t)] &&
          p[static_cast<std::size_t>(s)] < best_hi) {
        best_hi = p[static_cast<std::size_t>(s)];
        succ[static_cast<std::size_t>(t)] = s;
      }
    }
  }
}

// Backtracking pattern search.  Candidates are explored in ascending position
// order, so the first complete embedding is the lexicographically least one.
// When pin_pat >= 0, pattern index pin_pat must map to host index pin_host
// (both 0-based).
inline bool embed_search(const std::vector<int>& pat, const std::vector<int>& host, int pin_pat,
                         int pin_host, std::vector<int>& out) {
  const int k = static_cast<int>(pat.size());
  const int n = static_cast<int>(host.size());
  if (k > n) return false;
  if (k == 0) {
    out.clear();
    return true;
  }
  std::vector<int> pred, succ;
  pred_succ(pat, pred, succ);
  std::vector<int> idx(static_cast<std::size_t>(k), -1);

  // host positions still needed after t: k - 1 - t
  auto rec = [&](auto&& self, int t) -> bool {
    if (t == k) return true;
    int from = (t == 0) ? 0 : idx[static_cast<std::size_t>(t - 1)] + 1;
    int to = n - (k - 1 - t);  // inclusive upper bound + 1 handled below
    if (pin_pat >= 0) {
      if (t == pin_pat) {
        from = std::max(from, pin_host);
        to = std::min(to, pin_host + 1);
      } else if (t < pin_pat) {
        to = std::min(to, pin_host - (pin_pat - 1 - t));
      } else {
        from = std::max(from, pin_host + (t - pin_pat));
      }
    }
    const int lo =
        pred[static_cast<std::size_t>(t)] < 0
            ? 0
            : host[static_cast<std::size_t>(idx[static_cast<std::size_t>(pred[static_cast<std::size_t>(t)])])];
    const int hi =
        succ[static_cast<std::size_t>(t)] < 0
            ? n + 1
            : host[static_cast<std::size_t>(idx[static_cast<std::size_t>(succ[static_cast<std::size_t>(t)])])];
    for (int j = from; j < to; ++j) {
      const int v = host[static_cast<std::size_t>(j)];
      if (v <= lo || v >= hi) continue;
      idx[static_cast<std::size_t>(t)] = j;
      if (self(self, t + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return false;
  out = idx;
  return true;
}

}  // namespace detail

// Classical pattern containment: a witnessing embedding of `pattern` in `host`,
// or nullopt.  The returned embedding is the lexicographically least one.
inline std::optional<Embedding> contains(const Permutation& pattern, const Permutation& host) {
  std::vector<int> idx;
  if (!detail::embed_search(pattern.entries(), host.entries(), -1, -1, idx)) return std::nullopt;
  Embedding e;
  e.indices.reserve(idx.size());
  for (int j : idx) e.indices.push_back(j + 1);
  return e;
}

inline bool contains_bool(const Permutation& pattern, const Permutation& host) {
  return contains(pattern, host).has_value();
}

inline bool avoids(const Permutation& host, const Permutation& pattern) {
  return !contains_bool(pattern, host);
}

namespace detail {

// Containment with the pattern's maximum entry pinned to a given host position
// (both 1-based).  Used by insertion-based enumeration, where any new
// occurrence must use the freshly inserted maximum.
inline bool contains_pinned_max(const Permutation& pattern, const Permutation& host,
                                int pinned_host_pos) {
  const auto& p = pattern.entries();
  int pin_pat = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
  std::vector<int> idx;
  return embed_search(p, host.entries(), pin_pat, pinned_host_pos - 1, idx);
}

}  // namespace detail

enum class Symmetry {
  inverse,
  reverse,
  complement,
  reverse_complement,
  inverse_reverse_complement,
};

inline Permutation symmetry(const Permutation& p, Symmetry s) {
  const int n = p.size();
  std::vector<int> q(static_cast<std::size_t>(n));
  switch (s) {
    case Symmetry::inverse:
      for (int i = 1; i <= n; ++i) q[static_cast<std::size_t>(p(i) - 1)] = i;
      break;
    case Symmetry::reverse:
      for (int i = 1; i <= n; ++i) q[static_cast<std::size_t>(i - 1)] = p(n + 1 - i);
      break;
    case Symmetry::complement:
      for (int i = 1; i <= n; ++i) q[static_cast<std::size_t>(i - 1)] = n + 1 - p(i);
      break;
    case Symmetry::reverse_complement:
      for (int i = 1; i <= n; ++i) q[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
      break;
    case Symmetry::inverse_reverse_complement:
      return symmetry(symmetry(p, Symmetry::inverse), Symmetry::reverse_complement);
  }
  return Permutation(std::move(q));
}

// The four symmetries fixing the permutation graph: pi, pi^-1, pi^rc, (pi^-1)^rc.
inline std::vector<Permutation> graph_symmetry_orbit(const Permutation& p) {
  std::vector<Permutation> orbit = {
      p,
      symmetry(p, Symmetry::inverse),
      symmetry(p, Symmetry::reverse_complement),
      symmetry(p, Symmetry::inverse_reverse_complement),
  };
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

enum class CombineMode { sum, skew };

// sum: tau above and to the right of sigma; skew: tau below and to the right.
inline Permutation combine(const Permutation& sigma, const Permutation& tau, CombineMode mode) {
  if (sigma.empty() || tau.empty()) throw std::invalid_argument("combine requires nonempty parts");
  const int m = sigma.size(), n = tau.size();
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(m + n));
  if (mode == CombineMode::sum) {
    for (int i = 1; i <= m; ++i) v.push_back(sigma(i));
    for (int i = 1; i <= n; ++i) v.push_back(tau(i) + m);
  } else {
    for (int i = 1; i <= m; ++i) v.push_back(sigma(i) + n);
    for (int i = 1; i <= n; ++i) v.push_back(tau(i));
  }
  return Permutation(std::move(v));
}

inline Permutation combine_all(const std::vector<Permutation>& parts, CombineMode mode) {
  if (parts.empty()) throw std::invalid_argument("combine_all requires at least one part");
  Permutation acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = combine(acc, parts[i], mode);
  return acc;
}

// k-fold sum of 21 (21 + 21 + ... = 2143...) / k-fold skew sum of 12.
inline Permutation sum_of_21(int k) {
  std::vector<int> v;
  for (int b = 0; b < k; ++b) {
    v.push_back(2 * b + 2);
    v.push_back(2 * b + 1);
  }
  return Permutation(std::move(v));
}

inline Permutation skew_of_12(int k) {
  std::vector<int> v;
  for (int b = 0; b < k; ++b) {
    v.push_back(2 * (k - 1 - b) + 1);
    v.push_back(2 * (k - 1 - b) + 2);
  }
  return Permutation(std::move(v));
}

// sigma[alpha_1, ..., alpha_m]: replace entry sigma(i) by an interval order
// isomorphic to parts[i-1].
inline Permutation inflate(const Permutation& sigma, const std::vector<Permutation>& parts) {
  const int m = sigma.size();
  if (static_cast<int>(parts.size()) != m)
    throw std::invalid_argument("inflation requires one part per entry of the skeleton");
  for (const auto& part : parts)
    if (part.empty()) throw std::invalid_argument("inflation parts must be nonempty");

  // value offset of block i = total size of blocks with smaller skeleton value
  std::vector<int> offset(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i) {
    int off = 0;
    for (int j = 1; j <= m; ++j)
      if (sigma(j) < sigma(i)) off += parts[static_cast<std::size_t>(j - 1)].size();
    offset[static_cast<std::size_t>(i - 1)] = off;
  }
  std::vector<int> v;
  for (int i = 1; i <= m; ++i) {
    const auto& part = parts[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= part.size(); ++j)
      v.push_back(part(j) + offset[static_cast<std::size_t>(i - 1)]);
  }
  return Permutation(std::move(v));
}

// All intervals of length >= 2 (contiguous positions with contiguous values),
// including the full range when n >= 2, sorted by (start, end).
inline std::vector<std::pair<int, int>> intervals(const Permutation& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n; ++a) {
    int lo = p(a), hi = p(a);
    for (int b = a + 1; b <= n; ++b) {
      lo = std::min(lo, p(b));
      hi = std::max(hi, p(b));
      if (hi - lo == b - a) out.emplace_back(a, b);
    }
  }
  return out;
}

inline std::vector<std::pair<int, int>> proper_intervals(const Permutation& p) {
  auto all = intervals(p);
  std::erase_if(all, [&](const auto& iv) { return iv.first == 1 && iv.second == p.size(); });
  return all;
}

// Simple: the only intervals have length 0, 1 and n.  Lengths 1 and 2 are
// simple; length 3 never is.
inline bool is_simple(const Permutation& p) {
  const int n = p.size();
  if (n <= 2) return true;
  for (int a = 1; a <= n; ++a) {
    int lo = p(a), hi = p(a);
    for (int b = a + 1; b <= n; ++b) {
      lo = std::min(lo, p(b));
      hi = std::max(hi, p(b));
      if (hi - lo == b - a && b - a + 1 < n) return false;
    }
  }
  return true;
}

// Lengths of the longest increasing and longest decreasing subsequences.
inline std::pair<int, int> longest_monotone(const Permutation& p) {
  const int n = p.size();
  if (n == 0) throw std::invalid_argument("longest_monotone requires a nonempty permutation");
  std::vector<int> inc(static_cast<std::size_t>(n), 1), dec(static_cast<std::size_t>(n), 1);
  int best_inc = 1, best_dec = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (p(j + 1) < p(i + 1))
        inc[static_cast<std::size_t>(i)] =
            std::max(inc[static_cast<std::size_t>(i)], inc[static_cast<std::size_t>(j)] + 1);
      else
        dec[static_cast<std::size_t>(i)] =
            std::max(dec[static_cast<std::size_t>(i)], dec[static_cast<std::size_t>(j)] + 1);
    }
    best_inc = std::max(best_inc, inc[static_cast<std::size_t>(i)]);
    best_dec = std::max(best_dec, dec[static_cast<std::size_t>(i)]);
  }
  return {best_inc, best_dec};
}

// Largest k with (21 + ... + 21) (k summands) contained, and largest k with
// the k-fold skew sum of 12 contained.
inline std::pair<int, int> monotone_chain_diagnostic(const Permutation& p) {
  const int n = p.size();
  int sum21 = 0;
  while (2 * (sum21 + 1) <= n && contains_bool(sum_of_21(sum21 + 1), p)) ++sum21;
  int skew12 = 0;
  while (2 * (skew12 + 1) <= n && contains_bool(skew_of_12(skew12 + 1), p)) ++skew12;
  return {sum21, skew12};
}

// A finite antichain of forbidden patterns; minimality (no pattern contains
// another) is enforced at construction by dropping any pattern that contains
// a smaller one, since it forbids nothing extra.
struct PatternBasis {
  std::vector<Permutation> patterns;

  PatternBasis() = default;

  explicit PatternBasis(std::vector<Permutation> pats) : patterns(std::move(pats)) {
    for (const auto& p : patterns)
      if (p.empty()) throw std::invalid_argument("basis patterns must be nonempty");
    std::sort(patterns.begin(), patterns.end());
    patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
    std::vector<Permutation> minimal;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < patterns.size() && !redundant; ++j)
        if (i != j && contains_bool(patterns[j], patterns[i])) redundant = true;
      if (!redundant) minimal.push_back(patterns[i]);
    }
    patterns = std::move(minimal);
  }

  static PatternBasis parse(std::string_view text) {
    std::vector<Permutation> pats;
    std::string current;
    auto flush = [&] {
      if (!current.empty()) {
        pats.push_back(Permutation::parse(current));
        current.clear();
      }
    };
    for (char c : text) {
      if (c == ';') {
        flush();
      } else {
        current.push_back(c);
      }
    }
    flush();
    if (pats.empty()) throw std::invalid_argument("empty pattern basis");
    return PatternBasis(std::move(pats));
  }

  bool avoided_by(const Permutation& p) const {
    for (const auto& pat : patterns)
      if (contains_bool(pat, p)) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (i) out += "; ";
      out += patterns[i].str();
    }
    return out;
  }
};

// Av(321, 231, 312): all finite subpermutations of 214365...
inline PatternBasis oplus21_basis() {
  return PatternBasis({Permutation({3, 2, 1}), Permutation({2, 3, 1}), Permutation({3, 1, 2})});
}

// All permutations of length n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    out.push_back(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace permgrid
