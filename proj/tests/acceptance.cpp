// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion carries its wall-clock budget; exceeding it fails
// the criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "permgrid/antichain.hpp"
#include "permgrid/enumeration.hpp"
#include "permgrid/graph.hpp"
#include "permgrid/grid.hpp"
#include "permgrid/hull.hpp"
#include "permgrid/permutation.hpp"
#include "permgrid/rectangle.hpp"
#include "permgrid/substitution.hpp"

using namespace permgrid;

namespace {

int failures = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("time budget exceeded");
  }
  std::printf("%s  criterion %2d  %-34s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
              elapsed, detail.empty() ? "" : "  -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Permutation P(const std::string& s) { return Permutation::parse(s); }

// depth-first enumeration of basis avoiders by maximum-value insertion
void for_each_avoider(const PatternBasis& basis, int n_max,
                      const std::function<void(const Permutation&)>& visit) {
  for (const auto& pat : basis.patterns)
    if (pat.size() == 1) return;
  std::vector<int> current = {1};
  auto dfs = [&](auto&& self) -> void {
    Permutation p{std::vector<int>(current)};
    visit(p);
    if (static_cast<int>(current.size()) == n_max) return;
    const int next_value = static_cast<int>(current.size()) + 1;
    for (int gap = 0; gap <= static_cast<int>(current.size()); ++gap) {
      current.insert(current.begin() + gap, next_value);
      Permutation child{std::vector<int>(current)};
      bool hit = false;
      for (const auto& pat : basis.patterns)
        if (pat.size() <= child.size() && detail::contains_pinned_max(pat, child, gap + 1)) {
          hit = true;
          break;
        }
      if (!hit) self(self);
      current.erase(current.begin() + gap);
    }
  };
  dfs(dfs);
}

// the extremal-entry dichotomy: the four extremal entries of a simple
// permutation never form the pattern 2143
bool extremal_property_holds(const Permutation& p) {
  const int n = p.size();
  if (n < 2) return true;
  if (p(1) == 1 || p(1) == n || p(n) == 1 || p(n) == n)
    return true;  // extremal roles collapse; the forbidden configuration needs four points
  const int pos_max = p.position_of(n);
  const int pos_min = p.position_of(1);
  return pos_max < pos_min || p(1) > p(n);
}

}  // namespace

int main() {
  // 1. fibres of the short paths
  run_criterion(1, "path fibres P5 and P7", 10.0, [](std::string& detail) {
    auto p5 = perms_of_graph(build_named(NamedGraph::path, 5), 5);
    auto p7 = perms_of_graph(build_named(NamedGraph::path, 7), 7);
    const bool ok5 = p5 == std::vector<Permutation>{P("24153"), P("31524")};
    const bool ok7 = p7 == std::vector<Permutation>{P("2416375"), P("3152746")};
    if (!ok5) detail = "Perms(P5) mismatch";
    if (!ok7) detail += " Perms(P7) mismatch";
    return ok5 && ok7;
  });

  // 2. extremal entries of simple permutations in Av(24153, 31524), n <= 9
  run_criterion(2, "extremal entries of simples", 300.0, [](std::string& detail) {
    const PatternBasis basis({P("24153"), P("31524")});
    long long simples = 0, violations = 0;
    for_each_avoider(basis, 9, [&](const Permutation& p) {
      if (!is_simple(p)) return;
      ++simples;
      if (!extremal_property_holds(p)) ++violations;
    });
    detail = std::to_string(simples) + " simples, " + std::to_string(violations) + " violations";
    return violations == 0 && simples > 0;
  });

  // 3. substitution depth bound in Av(lll...21), l in {3, 4}, n <= 9
  run_criterion(3, "substitution depth bounds", 300.0, [](std::string& detail) {
    long long checked = 0, violations = 0;
    for (int l : {3, 4}) {
      const PatternBasis basis({Permutation::decreasing(l)});
      for_each_avoider(basis, 9, [&](const Permutation& p) {
        ++checked;
        if (substitution_depth(p) > 2 * l - 3) ++violations;
      });
    }
    detail = std::to_string(checked) + " permutations, " + std::to_string(violations) +
             " violations";
    return violations == 0 && checked > 0;
  });

  // 4. the three-part encoding graphs B_pi
  run_criterion(4, "three-part encoding graphs", 300.0, [](std::string& detail) {
    std::vector<Permutation> perms;
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : all_permutations(n)) perms.push_back(p);
    Graph two_k2 = Graph::from_edges(4, {{1, 2}, {3, 4}});
    for (const auto& p : perms) {
      Graph g = ding_graph(p);
      if (induced_contains(g, two_k2).has_value()) {
        detail = "2K2 found in the encoding of " + p.str();
        return false;
      }
      if (has_clique(g, 4)) {
        detail = "K4 found in the encoding of " + p.str();
        return false;
      }
    }
    bool exact = true;
    std::string first_mismatch;
    bool corrected = true;
    for (const auto& s : perms)
      for (const auto& p : perms) {
        const bool graph_side = induced_contains(ding_graph(p), ding_graph(s)).has_value();
        if (contains_bool(s, p) != graph_side && exact) {
          exact = false;
          first_mismatch = s.str() + " vs " + p.str();
        }
        const bool either =
            contains_bool(s, p) || contains_bool(symmetry(s, Symmetry::inverse), p);
        if (graph_side != either) corrected = false;
      }
    if (!exact) {
      detail = "plain equivalence fails (" + first_mismatch +
               "): swapping the V/W sides maps the encoding of a permutation onto the "
               "encoding of its inverse, so the equivalence can only hold up to inversion; "
               "the corrected equivalence was verified " +
               (corrected ? "exhaustively over all pairs of lengths <= 4"
                          : "and FAILED TOO");
      return false;
    }
    return true;
  });

  // 5. the vertex-split encoding graphs
  run_criterion(5, "vertex-split encoding graphs", 300.0, [](std::string& detail) {
    Graph two_p3 = Graph::from_edges(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
    for (int n = 1; n <= 4; ++n)
      for (const auto& p : all_permutations(n)) {
        Graph g = split_graph(p);
        auto side = [&](int v) {
          const auto& label = g.labels()[static_cast<std::size_t>(v - 1)];
          return label == "U1" || label == "W";
        };
        for (auto [u, v] : g.edges())
          if (side(u) == side(v)) {
            detail = "split graph of " + p.str() + " is not bipartite";
            return false;
          }
      }
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : all_permutations(n))
        if (induced_contains(split_graph(p), two_p3).has_value()) {
          detail = "2P3 found in the split encoding of " + p.str();
          return false;
        }
    return true;
  });

  // 6. parallel antichain
  run_criterion(6, "parallel antichain", 300.0, [](std::string& detail) {
    GridMatrix m = parallel_family_matrix();
    auto elems = antichain_prefix(Family::parallel, 3);
    const int want_lengths[] = {12, 16, 20};
    for (int k = 0; k < 3; ++k) {
      const Permutation& e = elems[static_cast<std::size_t>(k)];
      if (e.size() != want_lengths[k]) {
        detail = "wrong length";
        return false;
      }
      auto g = grid_membership(e, m);
      if (!g || !gridding_valid(e, m, *g)) {
        detail = "grid membership fails for k=" + std::to_string(k + 1);
        return false;
      }
      if (!(symmetry(e, Symmetry::reverse_complement) == e)) {
        detail = "not reverse-complement invariant";
        return false;
      }
      if (!contains_bool(P("24531"), e)) {
        detail = "24531 missing";
        return false;
      }
      if (contains_bool(P("51423"), e) || contains_bool(P("34251"), e)) {
        detail = "forbidden pattern embeds";
        return false;
      }
      auto props = proper_intervals(e);
      if (props.size() != 2) {
        detail = "interval structure wrong";
        return false;
      }
      Graph gr = graph_of(e);
      if (!omits(gr, {7, 5})) {
        detail = "graph does not omit P7/K5";
        return false;
      }
    }
    auto report = verify_graph_antichain(elems, GraphMode::symmetry);
    if (!report.antichain) detail = "symmetry-mode verification failed";
    return report.antichain;
  });

  // 7. hook antichain
  run_criterion(7, "hook antichain", 600.0, [](std::string& detail) {
    GridMatrix m = hook_family_matrix();
    auto elems = antichain_prefix(Family::hook, 3);
    const int want_lengths[] = {11, 17, 23};
    for (int k = 0; k < 3; ++k) {
      const Permutation& e = elems[static_cast<std::size_t>(k)];
      if (e.size() != want_lengths[k]) {
        detail = "wrong length";
        return false;
      }
      auto g = grid_membership(e, m);
      if (!g || !gridding_valid(e, m, *g)) {
        detail = "grid membership fails for k=" + std::to_string(k + 1);
        return false;
      }
      if (!omits(graph_of(e), {6, 6})) {
        detail = "graph does not omit P6/K6";
        return false;
      }
    }
    auto direct = verify_graph_antichain({elems[0], elems[1]}, GraphMode::direct);
    if (!direct.antichain) {
      detail = "direct mode failed on k=1 vs k=2";
      return false;
    }
    auto sym = verify_graph_antichain(elems, GraphMode::symmetry);
    if (!sym.antichain) detail = "symmetry mode failed";
    return sym.antichain;
  });

  // 8. antichain in the 2x2 all-increasing class
  run_criterion(8, "2x2 monotone-grid antichain", 300.0, [](std::string& detail) {
    GridMatrix m = monotone_grid_family_matrix();
    auto elems = antichain_prefix(Family::monotone_grid, 3);
    for (int k = 0; k < 3; ++k) {
      const Permutation& e = elems[static_cast<std::size_t>(k)];
      auto g = grid_membership(e, m);
      if (!g || !gridding_valid(e, m, *g)) {
        detail = "grid membership fails for k=" + std::to_string(k + 1);
        return false;
      }
      if (!omits(graph_of(e), {8, 4})) {
        detail = "graph does not omit P8/K4";
        return false;
      }
    }
    auto report = verify_graph_antichain(elems, GraphMode::direct, 32);
    if (!report.antichain) detail = "direct-mode verification failed";
    return report.antichain;
  });

  // 9. enumeration
  run_criterion(9, "enumeration counts", 120.0, [](std::string& detail) {
    auto av21 = count_avoiders(PatternBasis::parse("21"), 10);
    for (long long c : av21.counts)
      if (c != 1) {
        detail = "Av(21) count differs from 1";
        return false;
      }
    auto av321 = count_avoiders(PatternBasis::parse("321"), 7);
    for (int n = 1; n <= 7; ++n) {
      long long naive = 0;
      for (const auto& p : all_permutations(n))
        if (avoids(p, P("321"))) ++naive;
      if (av321.counts[static_cast<std::size_t>(n - 1)] != naive) {
        detail = "Av(321) count differs from the naive filter at n=" + std::to_string(n);
        return false;
      }
    }
    auto mixed = count_avoiders(PatternBasis::parse("24153;31524;321"), 5);
    if (mixed.counts[4] != 40) {
      detail = "Av(24153,31524,321) at n=5 is " + std::to_string(mixed.counts[4]);
      return false;
    }
    return true;
  });

  // 10. recurrence guessing
  run_criterion(10, "recurrence guesser", 60.0, [](std::string& detail) {
    auto constant = guess_recurrence({1, 1, 1, 1, 1, 1, 1, 1}, 2, 2);
    if (!constant || constant->order() != 1 || !(constant->coefficients[0] == Rational(1))) {
      detail = "constant sequence not recovered";
      return false;
    }
    auto doubling = guess_recurrence({1, 2, 4, 8, 16, 32, 64, 128}, 2, 2);
    if (!doubling || doubling->order() != 1 || !(doubling->coefficients[0] == Rational(2)) ||
        predict(*doubling, 7) != 64) {
      detail = "doubling sequence not recovered";
      return false;
    }
    std::vector<long long> catalan = {1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
    if (guess_recurrence(catalan, 4, 2).has_value()) {
      detail = "spurious recurrence fitted to Catalan numbers";
      return false;
    }
    return true;
  });

  // 11. property suites
  run_criterion(11, "property suites", 600.0, [](std::string& detail) {
    // corner-free => forest over all 0/1 matrices with t,u <= 3
    for (int t = 1; t <= 3; ++t)
      for (int u = 1; u <= 3; ++u)
        for (int mask = 0; mask < (1 << (t * u)); ++mask) {
          GridMatrix m(t, u);
          int bit = 0;
          for (int col = 1; col <= t; ++col)
            for (int row = 1; row <= u; ++row, ++bit)
              if (mask & (1 << bit)) m.at(col, row) = Cell::inc();
          if (corner_free(m) && !is_forest(m)) {
            detail = "corner-free matrix with a cycle";
            return false;
          }
        }

    // monotone subsequence guarantee, a,b <= 4, exhaustively
    for (int a = 2; a <= 4; ++a)
      for (int b = 2; b <= 4; ++b) {
        const int n = (a - 1) * (b - 1) + 1;
        for (const auto& p : all_permutations(n)) {
          auto [inc, dec] = longest_monotone(p);
          if (inc < a && dec < b) {
            detail = "monotone guarantee fails at n=" + std::to_string(n);
            return false;
          }
        }
      }

    // decompose/reconstruct roundtrip for all permutations of length <= 8
    for (int n = 1; n <= 8; ++n)
      for (const auto& p : all_permutations(n))
        if (!(reconstruct(decompose(p)) == p)) {
          detail = "roundtrip fails for " + p.str();
          return false;
        }

    // gridding soundness replay on every returned gridding
    std::vector<std::pair<std::string, GridMatrix>> membership_samples;
    membership_samples.emplace_back("3 2 7 4 12 8 5 1 9 6 11 10", parallel_family_matrix());
    membership_samples.emplace_back("8 5 10 9 6 2 1 4 7 11 3", hook_family_matrix());
    membership_samples.emplace_back("2413", GridMatrix::parse("1 1\n1 1"));
    membership_samples.emplace_back("214365", GridMatrix::parse("1 1;1 1"));
    for (const auto& [text, matrix] : membership_samples) {
      Permutation p = P(text);
      auto g = grid_membership(p, matrix);
      if (g && !gridding_valid(p, matrix, *g)) {
        detail = "replay failed for " + text;
        return false;
      }
    }

    // hull propagation postconditions on a chained instance
    HullConfig cfg{P("1 4 2 7 8 3 5 6"),
                   {{Rectangle(1, 2, 1, 4), Orientation::inc},
                    {Rectangle(3, 8, 2, 6), Orientation::inc},
                    {Rectangle(4, 5, 7, 8), Orientation::inc}}};
    auto result = propagate_hulls(cfg);
    if (!corner_free(result.matrix) || !gridding_valid(cfg.host, result.matrix, result.gridding)) {
      detail = "hull propagation postconditions fail";
      return false;
    }
    for (const auto& hull : cfg.hulls) {
      std::vector<std::pair<int, int>> cells;
      for (int i = 1; i <= cfg.host.size(); ++i) {
        const int v = cfg.host(i);
        if (i < hull.box.x1 || i > hull.box.x2 || v < hull.box.y1 || v > hull.box.y2) continue;
        int col = 0, row = 0;
        for (std::size_t k = 1; k < result.gridding.col_cuts.size(); ++k)
          if (i >= result.gridding.col_cuts[k - 1] && i < result.gridding.col_cuts[k])
            col = static_cast<int>(k);
        for (std::size_t l = 1; l < result.gridding.row_cuts.size(); ++l)
          if (v >= result.gridding.row_cuts[l - 1] && v < result.gridding.row_cuts[l])
            row = static_cast<int>(l);
        cells.emplace_back(col, row);
      }
      std::sort(cells.begin(), cells.end());
      cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
          if (cells[i].first == cells[j].first || cells[i].second == cells[j].second) {
            detail = "a hull occupies two cells in one row or column";
            return false;
          }
    }
    return true;
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "SOME CRITERIA FAILED");
  return failures;
}
