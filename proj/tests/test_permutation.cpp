#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "permgrid/permutation.hpp"

using namespace permgrid;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

// independent oracle: containment by scanning all index subsets
bool contains_brute(const Permutation& pat, const Permutation& host) {
  const int k = pat.size(), n = host.size();
  if (k > n) return false;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        if ((pat(a + 1) < pat(b + 1)) != (host(comb[a] + 1) < host(comb[b] + 1))) ok = false;
    if (ok) return true;
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int l = i + 1; l < k; ++l) comb[l] = comb[l - 1] + 1;
  }
}

std::vector<Permutation> perms_up_to(int n) {
  std::vector<Permutation> out;
  for (int k = 1; k <= n; ++k)
    for (const auto& p : all_permutations(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("parsing and formatting") {
  CHECK(P("24153").entries() == std::vector<int>{2, 4, 1, 5, 3});
  CHECK(P("2 4 1 5 3").entries() == std::vector<int>{2, 4, 1, 5, 3});
  CHECK(P("24153").str() == "2 4 1 5 3");
  CHECK(P("2 4 1 5 3").compact() == "24153");
  CHECK_THROWS_AS(P("2413578691"), std::invalid_argument);  // compact needs n <= 9
  CHECK_THROWS_AS(P("1 1"), std::invalid_argument);
  CHECK_THROWS_AS(P("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(P(""), std::invalid_argument);
  // ten or more entries are fine in whitespace form
  CHECK(P("10 9 8 7 6 5 4 3 2 1").size() == 10);
}

TEST_CASE("contains: examples") {
  CHECK(contains(P("241635"), P("3152746")).has_value());
  auto single = contains(P("1"), P("24153"));
  REQUIRE(single.has_value());
  CHECK(single->indices == std::vector<int>{1});
  CHECK_FALSE(contains(P("321"), P("24153")).has_value());
  CHECK(contains_brute(P("321"), P("24153")) == false);
  // longer pattern than host
  CHECK_FALSE(contains(P("1234"), P("123")).has_value());
}

TEST_CASE("contains: witness is lexicographically least and valid") {
  auto emb = contains(P("213"), P("24153"));
  REQUIRE(emb.has_value());
  REQUIRE(emb->indices.size() == 3);
  CHECK(std::is_sorted(emb->indices.begin(), emb->indices.end()));
  // the witness spells the pattern
  Permutation host = P("24153");
  std::vector<int> vals;
  for (int i : emb->indices) vals.push_back(host(i));
  CHECK(pattern_of(vals) == P("213"));
  CHECK(emb->indices == std::vector<int>{1, 3, 4});  // values 2 1 5
}

TEST_CASE("contains agrees with the brute-force oracle, lengths <= 5 in <= 6") {
  for (const auto& pat : perms_up_to(4))
    for (const auto& host : all_permutations(5))
      CHECK(contains_bool(pat, host) == contains_brute(pat, host));
}

TEST_CASE("containment is a partial order, lengths <= 5") {
  auto all = perms_up_to(5);
  const int n = static_cast<int>(all.size());
  // reflexive
  for (const auto& p : all) CHECK(contains_bool(p, p));
  // antisymmetric: distinct same-length permutations are incomparable
  for (const auto& a : all)
    for (const auto& b : all)
      if (a.size() == b.size() && !(a == b)) CHECK_FALSE(contains_bool(a, b));
  // transitive, via the full containment matrix
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) le[i][j] = contains_bool(all[i], all[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (le[j][k]) CHECK(le[i][k]);
    }
}

TEST_CASE("symmetry: examples") {
  CHECK(symmetry(P("24153"), Symmetry::inverse) == P("31524"));
  CHECK(symmetry(P("24531"), Symmetry::inverse) == P("51423"));
  CHECK(symmetry(P("24531"), Symmetry::inverse_reverse_complement) == P("34251"));
  for (int n = 1; n <= 6; ++n)
    CHECK(symmetry(Permutation::identity(n), Symmetry::inverse) == Permutation::identity(n));
}

TEST_CASE("symmetry: involutions and commutativity, lengths <= 6") {
  for (const auto& p : perms_up_to(6)) {
    CHECK(symmetry(symmetry(p, Symmetry::inverse), Symmetry::inverse) == p);
    CHECK(symmetry(symmetry(p, Symmetry::reverse_complement), Symmetry::reverse_complement) == p);
    CHECK(symmetry(symmetry(p, Symmetry::inverse), Symmetry::reverse_complement) ==
          symmetry(symmetry(p, Symmetry::reverse_complement), Symmetry::inverse));
    CHECK(symmetry(p, Symmetry::inverse_reverse_complement) ==
          symmetry(symmetry(p, Symmetry::inverse), Symmetry::reverse_complement));
  }
}

TEST_CASE("symmetries preserve containment, lengths <= 5") {
  const Symmetry syms[] = {Symmetry::inverse, Symmetry::reverse, Symmetry::complement,
                           Symmetry::reverse_complement, Symmetry::inverse_reverse_complement};
  for (const auto& pat : perms_up_to(3))
    for (const auto& host : perms_up_to(5)) {
      const bool base = contains_bool(pat, host);
      for (Symmetry s : syms)
        CHECK(contains_bool(symmetry(pat, s), symmetry(host, s)) == base);
    }
}

TEST_CASE("combine: examples") {
  CHECK(combine(P("21"), P("21"), CombineMode::sum) == P("2143"));
  CHECK(combine(P("12"), P("12"), CombineMode::skew) == P("3412"));
  CHECK(combine_all({P("21"), P("21"), P("21")}, CombineMode::sum) == P("214365"));
  CHECK(sum_of_21(3) == P("214365"));
  CHECK(skew_of_12(2) == P("3412"));
}

TEST_CASE("inflate: examples") {
  CHECK(inflate(P("21"), {P("12"), P("21")}) == P("3421"));
  CHECK_THROWS_AS(inflate(P("21"), {P("12")}), std::invalid_argument);
  // singleton inflation is the identity map
  for (const auto& p : perms_up_to(5)) {
    std::vector<Permutation> ones(static_cast<std::size_t>(p.size()), P("1"));
    CHECK(inflate(p, ones) == p);
  }
  // 12[sigma, tau] is the sum, exhaustively to length 4
  for (const auto& a : perms_up_to(4))
    for (const auto& b : perms_up_to(4))
      CHECK(inflate(P("12"), {a, b}) == combine(a, b, CombineMode::sum));
}

TEST_CASE("inflate respects containment, small skeletons and parts") {
  auto small = perms_up_to(3);
  for (const auto& sk : perms_up_to(2)) {
    for (const auto& a1 : small)
      for (const auto& b1 : small) {
        if (!contains_bool(a1, b1)) continue;
        for (const auto& a2 : small)
          for (const auto& b2 : small) {
            if (!contains_bool(a2, b2)) continue;
            std::vector<Permutation> small_parts = {a1, a2};
            std::vector<Permutation> big_parts = {b1, b2};
            small_parts.resize(static_cast<std::size_t>(sk.size()), P("1"));
            big_parts.resize(static_cast<std::size_t>(sk.size()), P("1"));
            CHECK(contains_bool(inflate(sk, small_parts), inflate(sk, big_parts)));
          }
      }
  }
}

TEST_CASE("intervals and simplicity") {
  CHECK(intervals(P("2413")) == std::vector<std::pair<int, int>>{{1, 4}});
  CHECK(is_simple(P("2413")));
  CHECK(intervals(P("2143")) == std::vector<std::pair<int, int>>{{1, 2}, {1, 4}, {3, 4}});
  CHECK_FALSE(is_simple(P("2143")));
  for (const auto& p : all_permutations(3)) CHECK_FALSE(is_simple(p));
  CHECK(is_simple(P("1")));
  CHECK(is_simple(P("21")));
  CHECK(is_simple(P("12")));
  // oracle: interval iff value set is contiguous
  for (const auto& p : all_permutations(5)) {
    auto ivs = intervals(p);
    std::set<std::pair<int, int>> got(ivs.begin(), ivs.end());
    for (int a = 1; a <= 5; ++a)
      for (int b = a + 1; b <= 5; ++b) {
        std::set<int> vals;
        for (int i = a; i <= b; ++i) vals.insert(p(i));
        const bool iv = *vals.rbegin() - *vals.begin() == b - a;
        CHECK(got.count({a, b}) == static_cast<std::size_t>(iv));
      }
  }
}

TEST_CASE("longest_monotone: examples") {
  CHECK(longest_monotone(P("24153")) == std::pair{3, 2});
  for (int n = 1; n <= 7; ++n)
    CHECK(longest_monotone(Permutation::identity(n)) == std::pair{n, 1});
  // every permutation of length 5 has an increasing or decreasing run of 3
  for (const auto& p : all_permutations(5)) {
    auto [inc, dec] = longest_monotone(p);
    CHECK((inc >= 3 || dec >= 3));
  }
}

TEST_CASE("monotone_chain_diagnostic: examples") {
  CHECK(monotone_chain_diagnostic(P("214365")).first == 3);
  CHECK(monotone_chain_diagnostic(P("24153")).first == 2);
  for (int n = 2; n <= 7; ++n)
    CHECK(monotone_chain_diagnostic(Permutation::identity(n)).first == 0);
  CHECK(monotone_chain_diagnostic(P("3412")).second == 2);
}

TEST_CASE("pattern basis enforces minimality by reduction") {
  CHECK(PatternBasis({P("21"), P("321")}).patterns == std::vector<Permutation>{P("21")});
  CHECK(PatternBasis::parse("24153;31524;21").patterns == std::vector<Permutation>{P("21")});
  auto b = PatternBasis::parse("24153; 31524; 321");
  CHECK(b.patterns.size() == 3);  // already an antichain
  CHECK(b.avoided_by(P("12345")));
  CHECK_FALSE(b.avoided_by(P("321")));
  CHECK_THROWS_AS(PatternBasis::parse(""), std::invalid_argument);
}

TEST_CASE("graph symmetry orbit") {
  auto orbit = graph_symmetry_orbit(P("24153"));
  CHECK(orbit.size() == 2);  // 24153 and its inverse; rc fixes both
  CHECK(std::count(orbit.begin(), orbit.end(), P("31524")) == 1);
}
