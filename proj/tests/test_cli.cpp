// End-to-end checks of the command-line tool via subprocesses.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#ifndef COVER3_BIN
#define COVER3_BIN "./cover3"
#endif

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(COVER3_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_test_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("cover3 command solves and agrees with the oracle variant") {
  auto points = tmp_file("pts.txt",
                         "DIM 2 KIND points\n0 0\n5 5\n9 1\n2 2\n");
  auto rects = tmp_file("rects.txt",
                        "DIM 2 KIND ranges WEIGHTED\n"
                        "0:3 0:3 2\n4:6 4:6 5\n8:10 0:2 7\n0:10 0:10 100\n");
  auto basic = run("cover3 --points " + points + " --rects " + rects + " --variant basic");
  REQUIRE(basic.exit_code == 0);
  json jb = json::parse(basic.out);
  REQUIRE(jb["status"] == "ok");
  auto oracle = run("cover3 --points " + points + " --rects " + rects + " --variant oracle");
  json jo = json::parse(oracle.out);
  REQUIRE(jb["weight"] == jo["weight"]);
  REQUIRE(jb["weight"] == "14");

  auto checked = run("cover3 --points " + points + " --rects " + rects +
                     " --variant weighted_rect --oracle-check");
  json jc = json::parse(checked.out);
  REQUIRE(jc["oracle_match"] == true);
  REQUIRE(jc["stats"]["g"].get<int>() >= 1);
}

TEST_CASE("cover3 command reports infeasible with exit code 2") {
  auto points = tmp_file("pts2.txt", "DIM 2 KIND points\n0 0\n100 100\n");
  auto rects = tmp_file("rects2.txt",
                        "DIM 2 KIND ranges\n0:1 0:1\n2:3 2:3\n4:5 4:5\n");
  auto r = run("cover3 --points " + points + " --rects " + rects + " --variant unweighted");
  REQUIRE(r.exit_code == 2);
  REQUIRE(json::parse(r.out)["status"] == "infeasible");
}

TEST_CASE("malformed input yields exit code 1 and an error payload") {
  auto bad = tmp_file("bad.txt", "DIM 2 KIND points\n1\n");
  auto rects = tmp_file("rects3.txt", "DIM 2 KIND ranges\n0:1 0:1\n");
  auto r = run("cover3 --points " + bad + " --rects " + rects);
  REQUIRE(r.exit_code == 1);
  json j = json::parse(r.out);
  REQUIRE(j["status"] == "error");
  REQUIRE(j["message"].get<std::string>().find("line 2") != std::string::npos);
}

TEST_CASE("d3c optimizes and decides") {
  auto points = tmp_file("pts3.txt", "DIM 2 KIND points\n0 0\n1 0\n2 0\n3 0\n");
  auto opt = run("d3c --points " + points);
  REQUIRE(opt.exit_code == 0);
  json j = json::parse(opt.out);
  REQUIRE(j["radius"] == "1");
  auto dec = run("d3c --points " + points + " --radius 1/2");
  REQUIRE(dec.exit_code == 2);
}

TEST_CASE("gen and verify pipeline on a tiny graph") {
  auto graph = tmp_file("graph.txt",
                        "DIM 1 KIND graph\n3 3\n0 1/20 1/10\n0 1/20\n1/20 1/10\n0 1/10\n");
  auto g = run("gen --kind triangle_boxes_r3 --source " + graph +
               " --out-points cli_test_outp.txt --out-ranges cli_test_outr.txt");
  REQUIRE(g.exit_code == 0);
  json jg = json::parse(g.out);
  REQUIRE(jg["points"] == 18);
  auto v = run("verify --kind triangle_boxes_r3 --source " + graph +
               " --instance-points cli_test_outp.txt --instance-ranges cli_test_outr.txt");
  REQUIRE(v.exit_code == 0);
  json jv = json::parse(v.out);
  REQUIRE(jv["agree"] == true);

  auto v2 = run("verify --kind weighted_triangle_r2 --source " +
                tmp_file("graphw.txt",
                         "DIM 1 KIND graph WEIGHTED\n3 3\n0 1/20 1/10\n0 1/20 1/100\n"
                         "1/20 1/10 1/50\n0 1/10 3/100\n"));
  REQUIRE(v2.exit_code == 0);
  REQUIRE(json::parse(v2.out)["agree"] == true);
}

TEST_CASE("oracle command and bench csv") {
  auto points = tmp_file("pts4.txt", "DIM 2 KIND points\n0 0\n1 0\n2 0\n3 0\n");
  auto k = run("oracle --problem kcenter --points " + points + " --k 3 --metric linf");
  REQUIRE(k.exit_code == 0);
  REQUIRE(json::parse(k.out)["radius"] == "1");

  auto b = run("bench --variant unit_unweighted --sizes 32,64 --runs 1 --seed 5 --oracle-check");
  REQUIRE(b.exit_code == 0);
  std::istringstream lines(b.out);
  std::string header;
  std::getline(lines, header);
  REQUIRE(header.find("variant,n,m,g,wall_ms") == 0);
  int rows = 0;
  std::string row;
  while (std::getline(lines, row))
    if (!row.empty()) {
      ++rows;
      REQUIRE(row.find("unit_unweighted") == 0);
      REQUIRE(row.rfind(",1") == row.size() - 2);  // oracle_match
    }
  REQUIRE(rows == 2);
}
