#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgrid/permutation.hpp"

namespace permgrid {

// Counts of basis-avoiding permutations, counts[i] for length i+1.
struct CountSequence {
  PatternBasis basis;
  std::vector<long long> counts;
};

// Prefix-extension DFS: grow avoiders by inserting the next maximum value at
// every gap; a branch dies as soon as some basis pattern embeds using the
// freshly inserted point.  Cross-checked against the naive filter in tests.
inline CountSequence count_avoiders(const PatternBasis& basis, int n_max) {
  if (n_max < 1) throw std::invalid_argument("count_avoiders needs n_max >= 1");
  if (n_max > 11) throw std::domain_error("count_avoiders is limited to n_max <= 11");
  CountSequence seq{basis, std::vector<long long>(static_cast<std::size_t>(n_max), 0)};

  for (const auto& pat : basis.patterns)
    if (pat.size() == 1) return seq;  // everything contains "1"

  std::vector<int> current = {1};
  auto dfs = [&](auto&& self) -> void {
    seq.counts[current.size() - 1]++;
    if (static_cast<int>(current.size()) == n_max) return;
    const int next_value = static_cast<int>(current.size()) + 1;
    for (int gap = 0; gap <= static_cast<int>(current.size()); ++gap) {
      current.insert(current.begin() + gap, next_value);
      Permutation child{std::vector<int>(current)};
      bool hit = false;
      for (const auto& pat : basis.patterns)
        if (pat.size() <= child.size() &&
            detail::contains_pinned_max(pat, child, gap + 1)) {
          hit = true;
          break;
        }
      if (!hit) self(self);
      current.erase(current.begin() + gap);
    }
  };
  dfs(dfs);
  return seq;
}

// Exact rational arithmetic on 64-bit numerator/denominator with 128-bit
// intermediates; throws std::overflow_error when a reduced value no longer
// fits.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long v) : num(v), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lo = -__int128(INT64_MAX), hi = __int128(INT64_MAX);
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_i128(__int128(a.num) * b.den + __int128(b.num) * a.den, __int128(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_i128(__int128(a.num) * b.den - __int128(b.num) * a.den, __int128(a.den) * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_i128(__int128(a.num) * b.num, __int128(a.den) * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("division by zero");
    return from_i128(__int128(a.num) * b.den, __int128(a.den) * b.num);
  }
};

// a(n) = c_1 a(n-1) + ... + c_d a(n-d), with the first d terms pinned.
struct LinearRecurrence {
  std::vector<Rational> coefficients;
  std::vector<long long> initial_terms;

  int order() const { return static_cast<int>(coefficients.size()); }
};

// Exact extrapolation of the 1-based n-th term; throws std::domain_error when
// a predicted term is not an integer.
inline long long predict(const LinearRecurrence& rec, int n) {
  if (n < 1) throw std::invalid_argument("term index must be >= 1");
  const int d = rec.order();
  if (static_cast<int>(rec.initial_terms.size()) < d)
    throw std::invalid_argument("recurrence needs d initial terms");
  if (n <= static_cast<int>(rec.initial_terms.size()))
    return rec.initial_terms[static_cast<std::size_t>(n - 1)];
  std::vector<Rational> window;
  for (long long v : rec.initial_terms) window.push_back(Rational(v));
  for (int k = static_cast<int>(rec.initial_terms.size()) + 1; k <= n; ++k) {
    Rational next(0);
    for (int i = 1; i <= d; ++i)
      next = next + rec.coefficients[static_cast<std::size_t>(i - 1)] * window[window.size() - i];
    if (!next.is_integer()) throw std::domain_error("recurrence predicted a non-integer term");
    window.push_back(next);
  }
  return window.back().num;
}

namespace detail {

// Solve A c = b exactly; returns a particular solution (free unknowns 0) iff
// the system is consistent.
inline std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
    std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(r)]);
    const Rational inv = Rational(1) / a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int j = c; j < cols; ++j)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
          a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv;
    b[static_cast<std::size_t>(r)] = b[static_cast<std::size_t>(r)] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
            f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] - f * b[static_cast<std::size_t>(r)];
    }
    pivot_col_of_row.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (!b[static_cast<std::size_t>(i)].is_zero()) return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
  for (int i = 0; i < r; ++i)
    x[static_cast<std::size_t>(pivot_col_of_row[static_cast<std::size_t>(i)])] =
        b[static_cast<std::size_t>(i)];
  return x;
}

}  // namespace detail

// Minimal-order constant-coefficient recurrence fitted to all terms except
// the last `holdout`, then validated exactly on the holdout; nullopt when no
// order <= max_order works.
inline std::optional<LinearRecurrence> guess_recurrence(const std::vector<long long>& terms,
                                                        int max_order, int holdout = 2) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (holdout < 0) throw std::invalid_argument("holdout must be >= 0");
  const int total = static_cast<int>(terms.size());
  if (total < 2 * max_order + holdout)
    throw std::invalid_argument("guess_recurrence needs at least 2*max_order + holdout terms");
  const int train = total - holdout;

  for (int d = 1; d <= max_order; ++d) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int idx = d; idx < train; ++idx) {
      std::vector<Rational> row;
      for (int i = 1; i <= d; ++i) row.push_back(Rational(terms[static_cast<std::size_t>(idx - i)]));
      a.push_back(std::move(row));
      b.push_back(Rational(terms[static_cast<std::size_t>(idx)]));
    }
    auto sol = detail::solve_linear(std::move(a), std::move(b));
    if (!sol) continue;
    LinearRecurrence rec;
    rec.coefficients = *sol;
    rec.initial_terms.assign(terms.begin(), terms.begin() + d);
    bool ok = true;
    try {
      for (int idx = d; idx < total && ok; ++idx)
        if (predict(rec, idx + 1) != terms[static_cast<std::size_t>(idx)]) ok = false;
    } catch (const std::domain_error&) {
      ok = false;
    }
    if (ok) return rec;
  }
  return std::nullopt;
}

inline std::optional<LinearRecurrence> guess_recurrence(const CountSequence& seq, int max_order,
                                                        int holdout = 2) {
  return guess_recurrence(seq.counts, max_order, holdout);
}

}  // namespace permgrid
