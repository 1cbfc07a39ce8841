#pragma once

// Closed forms for the two antichain families whose construction is owned by
// this library.  Both were derived empirically against the verifiers in this
// module (grid membership, pairwise containment, induced-subgraph checks),
// which remain the authority; see README for the derivation notes.

#include <vector>

#include "permgrid/antichain.hpp"

namespace permgrid {
namespace detail {

// Value ranks (1..4m) of the two pair tracks of one row, arranged so that the
// pair windows nest at both ends and form a staircase of partial overlaps in
// between:
//   r1 contains l1,  l2 straddles r1,  r2 straddles l2,  ...,  lm contains rm.
// l_vals / r_vals receive 2m ranks each in track order (lo1 hi1 lo2 hi2 ...).
inline void window_word(int m, std::vector<int>& l_vals, std::vector<int>& r_vals) {
  l_vals.assign(static_cast<std::size_t>(2 * m + 1), 0);
  r_vals.assign(static_cast<std::size_t>(2 * m + 1), 0);
  auto L = [&](int pair, int part) -> int& {
    return l_vals[static_cast<std::size_t>(2 * (pair - 1) + part + 1)];
  };
  auto R = [&](int pair, int part) -> int& {
    return r_vals[static_cast<std::size_t>(2 * (pair - 1) + part + 1)];
  };
  int v = 0;
  R(1, 0) = ++v;
  L(1, 0) = ++v;
  L(1, 1) = ++v;
  for (int j = 2; j <= m - 1; ++j) {
    L(j, 0) = ++v;
    R(j - 1, 1) = ++v;
    R(j, 0) = ++v;
    L(j, 1) = ++v;
  }
  L(m, 0) = ++v;
  R(m - 1, 1) = ++v;
  R(m, 0) = ++v;
  R(m, 1) = ++v;
  L(m, 1) = ++v;
}

// k-th element of the antichain inside the 2x2 all-increasing grid class
// (length 8k+8).  Each cell carries m = k+1 point pairs; both rows interleave
// their pair windows by the same anchored word, and each column keeps its
// pairs contiguous.  Pairs inside a cell are increasing, so all four cells
// stay monotone increasing.
inline Permutation monotone_grid_element(int k) {
  const int m = k + 1;
  std::vector<int> bvals, dvals, avals, cvals;
  window_word(m, bvals, dvals);  // bottom row: B (left) against D (right)
  window_word(m, avals, cvals);  // top row: A (left) against C (right)
  for (int i = 1; i <= 2 * m; ++i) {
    avals[static_cast<std::size_t>(i)] += 4 * m;
    cvals[static_cast<std::size_t>(i)] += 4 * m;
  }
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(8 * m));
  for (int i = 1; i <= m; ++i) {
    perm.push_back(avals[static_cast<std::size_t>(2 * i - 1)]);
    perm.push_back(avals[static_cast<std::size_t>(2 * i)]);
    perm.push_back(bvals[static_cast<std::size_t>(2 * i - 1)]);
    perm.push_back(bvals[static_cast<std::size_t>(2 * i)]);
  }
  for (int i = 1; i <= m; ++i) {
    perm.push_back(dvals[static_cast<std::size_t>(2 * i - 1)]);
    perm.push_back(dvals[static_cast<std::size_t>(2 * i)]);
    perm.push_back(cvals[static_cast<std::size_t>(2 * i - 1)]);
    perm.push_back(cvals[static_cast<std::size_t>(2 * i)]);
  }
  return Permutation(std::move(perm));
}

// k-th element of the increasing oscillating antichain (length 2k+6): the
// oscillation of length 2k+4 with its first and last entries each doubled
// into a 21 pair.
inline Permutation increasing_osc_element(int k) {
  const int m = 2 * k + 4;
  Permutation osc = increasing_oscillation(m);
  std::vector<Permutation> parts(static_cast<std::size_t>(m), Permutation({1}));
  parts.front() = Permutation({2, 1});
  parts.back() = Permutation({2, 1});
  return inflate(osc, parts);
}

}  // namespace detail
}  // namespace permgrid
