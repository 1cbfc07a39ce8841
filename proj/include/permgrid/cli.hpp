#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permgrid/antichain.hpp"
#include "permgrid/enumeration.hpp"
#include "permgrid/graph.hpp"
#include "permgrid/grid.hpp"
#include "permgrid/hull.hpp"
#include "permgrid/permutation.hpp"
#include "permgrid/rectangle.hpp"
#include "permgrid/substitution.hpp"

namespace permgrid::cli {

namespace detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::vector<std::string> split_records(const std::string& text) {
  std::vector<std::string> records;
  std::string current;
  for (char c : text) {
    if (c == '\n' || c == ';') {
      if (!current.empty() && current.find_first_not_of(" \t\r") != std::string::npos)
        records.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty() && current.find_first_not_of(" \t\r") != std::string::npos)
    records.push_back(current);
  return records;
}

inline std::vector<Rectangle> parse_rectangles(const std::string& text) {
  std::vector<Rectangle> rects;
  for (const auto& rec : split_records(text)) {
    std::istringstream in(rec);
    int x1, x2, y1, y2;
    if (!(in >> x1 >> x2 >> y1 >> y2))
      throw std::invalid_argument("bad rectangle record '" + rec + "' (want: x1 x2 y1 y2)");
    rects.emplace_back(x1, x2, y1, y2);
  }
  if (rects.empty()) throw std::invalid_argument("no rectangles given");
  return rects;
}

inline HullConfig parse_hull_config(const std::string& text) {
  auto records = split_records(text);
  if (records.size() < 2)
    throw std::invalid_argument("hull config needs a permutation line and at least one hull");
  HullConfig cfg;
  cfg.host = Permutation::parse(records[0]);
  for (std::size_t i = 1; i < records.size(); ++i) {
    std::istringstream in(records[i]);
    int x1, x2, y1, y2;
    std::string orient;
    if (!(in >> x1 >> x2 >> y1 >> y2 >> orient) || (orient != "inc" && orient != "dec"))
      throw std::invalid_argument("bad hull record '" + records[i] +
                                  "' (want: x1 x2 y1 y2 inc|dec)");
    cfg.hulls.push_back({Rectangle(x1, x2, y1, y2),
                         orient == "inc" ? Orientation::inc : Orientation::dec});
  }
  return cfg;
}

inline json cuts_json(const Gridding& g) {
  return json{{"cols", g.col_cuts}, {"rows", g.row_cuts}};
}

inline std::string cuts_text(const Gridding& g) {
  std::string out = "cols:";
  for (int c : g.col_cuts) out += " " + std::to_string(c);
  out += "\nrows:";
  for (int r : g.row_cuts) out += " " + std::to_string(r);
  out += "\n";
  return out;
}

inline json report_json(const AntichainReport& report) {
  json pairs = json::array();
  for (const auto& p : report.pairs)
    pairs.push_back(json{{"first", p.first},
                         {"second", p.second},
                         {"verdict", p.contained ? "violation" : "incomparable"},
                         {"detail", p.detail},
                         {"witness", p.witness}});
  json elems = json::array();
  for (const auto& e : report.elements) elems.push_back(e.str());
  return json{{"verdict", report.antichain ? "antichain" : "not-antichain"},
              {"elements", elems},
              {"notes", report.element_notes},
              {"pairs", pairs}};
}

inline void print_report(std::ostream& out, const AntichainReport& report) {
  for (std::size_t i = 0; i < report.element_notes.size(); ++i)
    out << "element " << (i + 1) << ": " << report.element_notes[i] << "\n";
  for (const auto& p : report.pairs) {
    out << p.first << " " << p.second << " "
        << (p.contained ? "violation: " + p.detail : std::string("incomparable")) << "\n";
  }
  out << (report.antichain ? "antichain" : "not-antichain") << "\n";
}

inline Symmetry parse_symmetry(std::string name) {
  for (auto& c : name)
    if (c == '_') c = '-';
  if (name == "inverse") return Symmetry::inverse;
  if (name == "reverse") return Symmetry::reverse;
  if (name == "complement") return Symmetry::complement;
  if (name == "reverse-complement" || name == "rc") return Symmetry::reverse_complement;
  if (name == "inverse-reverse-complement" || name == "irc")
    return Symmetry::inverse_reverse_complement;
  throw std::invalid_argument("unknown symmetry '" + name + "'");
}

}  // namespace detail

// Runs one CLI invocation.  Exit codes: 0 success, 1 domain/input error,
// 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::json;

  CLI::App app{"desk-scale toolkit for permutation containment, permutation graphs, "
               "grid classes and antichains"};
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format: text | structured")
      ->check(CLI::IsMember({"text", "structured"}));
  auto want_json = [&format] { return format == "structured"; };
  app.require_subcommand(1);

  json j;             // structured payload assembled by the callbacks
  std::string text;   // plain payload

  // ---- contains ----
  auto* c_contains = app.add_subcommand("contains", "find a pattern occurrence in a host");
  std::string arg_pattern, arg_host;
  c_contains->add_option("pattern", arg_pattern)->required();
  c_contains->add_option("host", arg_host)->required();
  c_contains->callback([&] {
    auto emb = contains(Permutation::parse(arg_pattern), Permutation::parse(arg_host));
    if (emb) {
      text = "present";
      for (int i : emb->indices) text += " " + std::to_string(i);
      text += "\n";
      j = json{{"verdict", "present"}, {"witness", emb->indices}};
    } else {
      text = "absent\n";
      j = json{{"verdict", "absent"}};
    }
  });

  // ---- symmetry ----
  auto* c_sym = app.add_subcommand("symmetry", "apply a symmetry to a permutation");
  std::string arg_perm, arg_which;
  c_sym->add_option("perm", arg_perm)->required();
  c_sym->add_option("which", arg_which,
                    "inverse | reverse | complement | reverse-complement | "
                    "inverse-reverse-complement")
      ->required();
  c_sym->callback([&] {
    Permutation q = symmetry(Permutation::parse(arg_perm), detail::parse_symmetry(arg_which));
    text = q.str() + "\n";
    j = json{{"perm", q.str()}};
  });

  // ---- graph ----
  auto* c_graph = app.add_subcommand("graph", "build the inversion graph or an encoding graph");
  std::string arg_gperm, arg_construction = "inversion";
  c_graph->add_option("perm", arg_gperm)->required();
  c_graph->add_option("--construction", arg_construction, "inversion | ding | split")
      ->check(CLI::IsMember({"inversion", "ding", "split"}));
  c_graph->callback([&] {
    Permutation p = Permutation::parse(arg_gperm);
    Graph g = arg_construction == "ding"    ? ding_graph(p)
              : arg_construction == "split" ? split_graph(p)
                                            : graph_of(p);
    text = g.str();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j = json{{"n", g.size()}, {"edges", edges}};
    if (!g.labels().empty()) j["labels"] = g.labels();
  });

  // ---- perms-of ----
  auto* c_perms = app.add_subcommand("perms-of", "all permutations whose inversion graph is G");
  int arg_path = 0, arg_clique = 0, arg_edgeless = 0, arg_cap = 9;
  std::string arg_graph_file;
  c_perms->add_option("--path", arg_path, "P_k");
  c_perms->add_option("--clique", arg_clique, "K_l");
  c_perms->add_option("--edgeless", arg_edgeless, "edgeless graph on n vertices");
  c_perms->add_option("--file", arg_graph_file, "graph in text format");
  c_perms->add_option("--cap", arg_cap, "brute-force length cap (<= 9)");
  c_perms->callback([&] {
    int sources = (arg_path > 0) + (arg_clique > 0) + (arg_edgeless > 0) + !arg_graph_file.empty();
    if (sources != 1)
      throw CLI::ValidationError("perms-of", "give exactly one of --path/--clique/--edgeless/--file");
    Graph g = arg_path > 0      ? build_named(NamedGraph::path, arg_path)
              : arg_clique > 0  ? build_named(NamedGraph::clique, arg_clique)
              : arg_edgeless > 0 ? build_named(NamedGraph::edgeless, arg_edgeless)
                                 : Graph::parse(detail::read_file(arg_graph_file));
    auto perms = perms_of_graph(g, arg_cap);
    json arr = json::array();
    for (const auto& p : perms) {
      text += p.str() + "\n";
      arr.push_back(p.str());
    }
    j = json{{"perms", arr}};
  });

  // ---- decompose / depth ----
  auto* c_dec = app.add_subcommand("decompose", "substitution decomposition tree");
  std::string arg_dperm;
  c_dec->add_option("perm", arg_dperm)->required();
  c_dec->callback([&] {
    auto tree = decompose(Permutation::parse(arg_dperm));
    text = to_string(tree) + "\n";
    j = json{{"tree", to_string(tree)}, {"depth", height(tree)}};
  });

  auto* c_depth = app.add_subcommand("depth", "substitution depth");
  std::string arg_hperm;
  c_depth->add_option("perm", arg_hperm)->required();
  c_depth->callback([&] {
    int d = substitution_depth(Permutation::parse(arg_hperm));
    text = std::to_string(d) + "\n";
    j = json{{"depth", d}};
  });

  // ---- grid-check ----
  auto* c_grid = app.add_subcommand("grid-check", "decide membership in a grid class");
  std::string arg_gcperm, arg_matrix, arg_matrix_file;
  c_grid->add_option("perm", arg_gcperm)->required();
  c_grid->add_option("--matrix", arg_matrix, "matrix text, rows top-to-bottom, ';' between rows");
  c_grid->add_option("--matrix-file", arg_matrix_file);
  c_grid->callback([&] {
    if (arg_matrix.empty() == arg_matrix_file.empty())
      throw CLI::ValidationError("grid-check", "give exactly one of --matrix/--matrix-file");
    GridMatrix m = GridMatrix::parse(arg_matrix.empty() ? detail::read_file(arg_matrix_file)
                                                        : arg_matrix);
    auto g = grid_membership(Permutation::parse(arg_gcperm), m);
    if (g) {
      text = "present\n" + detail::cuts_text(*g);
      j = json{{"verdict", "present"}, {"cuts", detail::cuts_json(*g)}};
    } else {
      text = "absent\n";
      j = json{{"verdict", "absent"}};
    }
  });

  // ---- corner-grid ----
  auto* c_corner = app.add_subcommand("corner-grid",
                                      "smallest corner-free 0/1 gridding of a permutation");
  std::string arg_ccperm;
  int arg_dim_cap = 8;
  c_corner->add_option("perm", arg_ccperm)->required();
  c_corner->add_option("--cap", arg_dim_cap, "bound on t+u");
  c_corner->callback([&] {
    auto hit = min_corner_free_gridding(Permutation::parse(arg_ccperm), arg_dim_cap);
    if (hit) {
      text = detail::cuts_text(hit->second) + hit->first.str();
      j = json{{"verdict", "present"},
               {"matrix", hit->first.str()},
               {"cuts", detail::cuts_json(hit->second)}};
    } else {
      text = "absent\n";
      j = json{{"verdict", "absent"}};
    }
  });

  // ---- slice ----
  auto* c_slice = app.add_subcommand("slice", "minimum axis-parallel lines slicing all rectangles");
  std::string arg_rects, arg_rects_file;
  c_slice->add_option("--rects", arg_rects, "records 'x1 x2 y1 y2', ';' separated");
  c_slice->add_option("--rects-file", arg_rects_file);
  c_slice->callback([&] {
    if (arg_rects.empty() == arg_rects_file.empty())
      throw CLI::ValidationError("slice", "give exactly one of --rects/--rects-file");
    auto rects = detail::parse_rectangles(arg_rects.empty() ? detail::read_file(arg_rects_file)
                                                            : arg_rects);
    auto lines = min_slicing_lines(rects);
    json arr = json::array();
    for (const auto& line : lines) {
      text += std::string(line.vertical ? "v" : "h") + " " + std::to_string(line.coord) + "\n";
      arr.push_back(json{{"axis", line.vertical ? "v" : "h"}, {"coord", line.coord}});
    }
    j = json{{"lines", arr}, {"counts", lines.size()}};
  });

  // ---- propagate ----
  auto* c_prop = app.add_subcommand("propagate", "hull side extension and propagation");
  std::string arg_cfg, arg_cfg_file;
  c_prop->add_option("--config", arg_cfg,
                     "permutation record, then hull records 'x1 x2 y1 y2 inc|dec'");
  c_prop->add_option("--config-file", arg_cfg_file);
  c_prop->callback([&] {
    if (arg_cfg.empty() == arg_cfg_file.empty())
      throw CLI::ValidationError("propagate", "give exactly one of --config/--config-file");
    auto cfg = detail::parse_hull_config(arg_cfg.empty() ? detail::read_file(arg_cfg_file)
                                                         : arg_cfg);
    auto result = propagate_hulls(cfg);
    text = detail::cuts_text(result.gridding) +
           "max-sliced: " + std::to_string(result.max_hulls_sliced_by_one_line) + "\n" +
           result.matrix.str();
    j = json{{"matrix", result.matrix.str()},
             {"cuts", detail::cuts_json(result.gridding)},
             {"max_sliced", result.max_hulls_sliced_by_one_line}};
  });

  // ---- antichain ----
  auto* c_anti = app.add_subcommand("antichain", "antichain generators and verifiers");
  c_anti->require_subcommand(1);

  auto* c_gen = c_anti->add_subcommand("gen", "emit antichain elements");
  std::string arg_family;
  int arg_k = 0, arg_count = 0;
  c_gen->add_option("family", arg_family, "parallel | hook | monogrid | incosc")->required();
  c_gen->add_option("--k", arg_k, "single element index");
  c_gen->add_option("--count", arg_count, "elements 1..count");
  c_gen->callback([&] {
    Family fam = parse_family(arg_family);
    if ((arg_k > 0) == (arg_count > 0))
      throw CLI::ValidationError("antichain gen", "give exactly one of --k/--count");
    json arr = json::array();
    const int lo = arg_k > 0 ? arg_k : 1;
    const int hi = arg_k > 0 ? arg_k : arg_count;
    for (int i = lo; i <= hi; ++i) {
      Permutation e = antichain_element({fam, i});
      text += e.str() + "\n";
      arr.push_back(e.str());
    }
    j = json{{"perms", arr}};
  });

  auto* c_verify = c_anti->add_subcommand("verify", "verify a finite antichain prefix");
  std::string arg_vfamily, arg_elements_file, arg_mode = "perm";
  int arg_vcount = 3, arg_budget = 24;
  c_verify->add_option("family", arg_vfamily, "parallel | hook | monogrid | incosc");
  c_verify->add_option("--count", arg_vcount, "elements 1..count");
  c_verify->add_option("--elements-file", arg_elements_file, "one permutation per line");
  c_verify->add_option("--mode", arg_mode, "perm | direct | symmetry")
      ->check(CLI::IsMember({"perm", "direct", "symmetry"}));
  c_verify->add_option("--budget", arg_budget, "vertex budget for direct mode");
  c_verify->callback([&] {
    std::vector<Permutation> elems;
    if (!arg_vfamily.empty()) {
      elems = antichain_prefix(parse_family(arg_vfamily), arg_vcount);
    } else if (!arg_elements_file.empty()) {
      for (const auto& rec : detail::split_records(detail::read_file(arg_elements_file)))
        elems.push_back(Permutation::parse(rec));
    } else {
      throw CLI::ValidationError("antichain verify", "give a family or --elements-file");
    }
    AntichainReport report =
        arg_mode == "perm"
            ? verify_perm_antichain(elems)
            : verify_graph_antichain(elems,
                                     arg_mode == "direct" ? GraphMode::direct : GraphMode::symmetry,
                                     arg_budget);
    std::ostringstream buf;
    detail::print_report(buf, report);
    text = buf.str();
    j = detail::report_json(report);
  });

  // ---- count ----
  auto* c_count = app.add_subcommand("count", "count basis avoiders by length");
  std::string arg_basis;
  int arg_n = 0;
  c_count->add_option("--basis", arg_basis, "patterns separated by ';'")->required();
  c_count->add_option("--n", arg_n, "maximum length (<= 11)")->required();
  c_count->callback([&] {
    auto seq = count_avoiders(PatternBasis::parse(arg_basis), arg_n);
    for (std::size_t i = 0; i < seq.counts.size(); ++i)
      text += std::to_string(i + 1) + " " + std::to_string(seq.counts[i]) + "\n";
    j = json{{"counts", seq.counts}};
  });

  // ---- guess ----
  auto* c_guess = app.add_subcommand("guess", "fit a minimal linear recurrence to counts");
  std::string arg_terms, arg_gbasis;
  int arg_gn = 0, arg_max_order = 4, arg_holdout = 2;
  c_guess->add_option("--terms", arg_terms, "whitespace-separated integer terms");
  c_guess->add_option("--basis", arg_gbasis, "count this basis instead of explicit terms");
  c_guess->add_option("--n", arg_gn, "length bound when counting a basis");
  c_guess->add_option("--max-order", arg_max_order);
  c_guess->add_option("--holdout", arg_holdout);
  c_guess->callback([&] {
    std::vector<long long> terms;
    if (!arg_terms.empty()) {
      std::istringstream in(arg_terms);
      long long v;
      while (in >> v) terms.push_back(v);
    } else if (!arg_gbasis.empty() && arg_gn > 0) {
      terms = count_avoiders(PatternBasis::parse(arg_gbasis), arg_gn).counts;
    } else {
      throw CLI::ValidationError("guess", "give --terms or --basis with --n");
    }
    auto rec = guess_recurrence(terms, arg_max_order, arg_holdout);
    if (!rec) {
      text = "absent\n";
      j = json{{"verdict", "absent"}};
      return;
    }
    std::string coeffs;
    json jc = json::array();
    for (const auto& c : rec->coefficients) {
      coeffs += (coeffs.empty() ? "" : " ") + c.str();
      jc.push_back(c.str());
    }
    std::string init;
    for (long long v : rec->initial_terms) init += (init.empty() ? "" : " ") + std::to_string(v);
    text = "order " + std::to_string(rec->order()) + "\ncoefficients: " + coeffs +
           "\ninitial: " + init + "\n";
    j = json{{"verdict", "present"},
             {"order", rec->order()},
             {"coefficients", jc},
             {"initial", rec->initial_terms}};
  });

  // ---- convert ----
  auto* c_convert = app.add_subcommand("convert", "format conversions");
  c_convert->require_subcommand(1);
  auto* c_cperm = c_convert->add_subcommand("perm", "permutation text conversions");
  std::string arg_cp_text, arg_to = "ws";
  c_cperm->add_option("input", arg_cp_text)->required();
  c_cperm->add_option("--to", arg_to, "ws | compact")->check(CLI::IsMember({"ws", "compact"}));
  c_cperm->callback([&] {
    Permutation p = Permutation::parse(arg_cp_text);
    std::string s = arg_to == "compact" ? p.compact() : p.str();
    text = s + "\n";
    j = json{{"perm", s}};
  });
  auto* c_cgraph = c_convert->add_subcommand("graph", "normalise a graph edge list");
  std::string arg_cg_file, arg_cg_text;
  c_cgraph->add_option("--file", arg_cg_file);
  c_cgraph->add_option("--text", arg_cg_text, "graph text, ';' usable as line separator");
  c_cgraph->callback([&] {
    if (arg_cg_file.empty() == arg_cg_text.empty())
      throw CLI::ValidationError("convert graph", "give exactly one of --file/--text");
    std::string raw = arg_cg_file.empty() ? arg_cg_text : detail::read_file(arg_cg_file);
    for (auto& c : raw)
      if (c == ';') c = '\n';
    Graph g = Graph::parse(raw);
    text = g.str();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j = json{{"n", g.size()}, {"edges", edges}};
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (want_json())
    out << j.dump(2) << "\n";
  else
    out << text;
  return 0;
}

}  // namespace permgrid::cli
