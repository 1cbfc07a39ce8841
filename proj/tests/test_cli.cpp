#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "permgrid/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = permgrid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("contains subcommand") {
  auto r = run_cli({"contains", "241635", "3152746"});
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 7) == "present");
  CHECK(r.out.find(' ') != std::string::npos);  // witness indices follow

  auto absent = run_cli({"contains", "321", "24153"});
  CHECK(absent.code == 0);
  CHECK(absent.out == "absent\n");

  auto j = run_cli({"contains", "241635", "3152746", "--format", "structured"});
  CHECK(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["verdict"] == "present");
  CHECK(parsed["witness"].size() == 6);
}

TEST_CASE("symmetry and convert subcommands") {
  CHECK(run_cli({"symmetry", "24153", "inverse"}).out == "3 1 5 2 4\n");
  CHECK(run_cli({"convert", "perm", "24153"}).out == "2 4 1 5 3\n");
  CHECK(run_cli({"convert", "perm", "2 4 1 5 3", "--to", "compact"}).out == "24153\n");
  auto bad = run_cli({"convert", "perm", "2413578691"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("n <= 9") != std::string::npos);
  // graph normalisation: edges sorted
  auto g = run_cli({"convert", "graph", "--text", "3;2 3;1 2"});
  CHECK(g.code == 0);
  CHECK(g.out == "3\n1 2\n2 3\n");
}

TEST_CASE("perms-of subcommand") {
  auto r = run_cli({"perms-of", "--path", "5"});
  CHECK(r.code == 0);
  CHECK(r.out == "2 4 1 5 3\n3 1 5 2 4\n");
  auto cap = run_cli({"perms-of", "--path", "5", "--cap", "4"});
  CHECK(cap.code == 1);
  auto usage = run_cli({"perms-of"});
  CHECK(usage.code == 2);
}

TEST_CASE("count subcommand") {
  auto r = run_cli({"count", "--basis", "21", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n");
}

TEST_CASE("decompose and depth subcommands") {
  CHECK(run_cli({"decompose", "375896214"}).out == "2413[1,3142[1,1,12,1],21,1]\n");
  CHECK(run_cli({"depth", "375896214"}).out == "3\n");
}

TEST_CASE("grid-check subcommand") {
  auto r = run_cli({"grid-check", "3 2 7 4 12 8 5 1 9 6 11 10", "--matrix", "oplus21 oplus21"});
  CHECK(r.code == 0);
  CHECK(r.out == "present\ncols: 1 7 13\nrows: 1 13\n");
  auto absent = run_cli({"grid-check", "51423", "--matrix", "oplus21 oplus21"});
  CHECK(absent.out == "absent\n");
}

TEST_CASE("corner-grid subcommand") {
  auto r = run_cli({"corner-grid", "2413"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cols: 1 3 5") != std::string::npos);
}

TEST_CASE("slice and propagate subcommands") {
  auto r = run_cli({"slice", "--rects", "1 2 1 2; 4 5 4 5"});
  CHECK(r.code == 0);
  // two independent rectangles need two lines
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);

  auto p = run_cli({"propagate", "--config", "1 2 3 4; 1 2 1 2 inc; 3 4 3 4 inc"});
  CHECK(p.code == 0);
  CHECK(p.out.find("cols: 1 3 5") != std::string::npos);
  CHECK(p.out.find("max-sliced: 0") != std::string::npos);
  CHECK(p.out.find("0 1\n1 0") != std::string::npos);
}

TEST_CASE("antichain subcommands") {
  auto gen = run_cli({"antichain", "gen", "parallel", "--k", "1"});
  CHECK(gen.out == "3 2 7 4 12 8 5 1 9 6 11 10\n");

  auto gen3 = run_cli({"antichain", "gen", "hook", "--count", "2"});
  CHECK(gen3.out.substr(0, gen3.out.find('\n')) == "8 5 10 9 6 2 1 4 7 11 3");

  auto verify = run_cli({"antichain", "verify", "parallel", "--count", "2", "--mode", "symmetry"});
  CHECK(verify.code == 0);
  CHECK(verify.out.find("antichain") != std::string::npos);
  CHECK(verify.out.find("not-antichain") == std::string::npos);

  // monogrid elements fail the two-21-interval precondition of symmetry mode
  auto bad = run_cli({"antichain", "verify", "monogrid", "--count", "2", "--mode", "symmetry"});
  CHECK(bad.code == 1);
}

TEST_CASE("guess subcommand") {
  auto r = run_cli({"guess", "--terms", "1 2 4 8 16 32 64 128 256 512"});
  CHECK(r.code == 0);
  CHECK(r.out == "order 1\ncoefficients: 2\ninitial: 1\n");
  auto absent =
      run_cli({"guess", "--terms", "1 2 5 14 42 132 429 1430 4862 16796 58786"});
  CHECK(absent.out == "absent\n");
}

TEST_CASE("exit codes and byte stability") {
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"contains", "99", "123"}).code == 1);
  auto a = run_cli({"perms-of", "--path", "5"});
  auto b = run_cli({"perms-of", "--path", "5"});
  CHECK(a.out == b.out);
}
