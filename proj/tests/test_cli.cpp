#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "support/temp_dir.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run tscx(const TempDir& dir, const std::string& args) {
  const auto out = dir.path() / "stdout.txt";
  const auto err = dir.path() / "stderr.txt";
  const std::string cmd = std::string("cd '") + dir.path().string() + "' && '" TSCX_CLI_PATH "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

const char* kNormalSpec = R"('{"kind":"normal","length":600,"seed":4}')";

}  // namespace

TEST_CASE("version and help", "[cli]") {
  TempDir dir;
  auto r = tscx(dir, "--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.0.0") != std::string::npos);
  CHECK(tscx(dir, "--help").code == 0);
}

TEST_CASE("usage errors exit 1", "[cli]") {
  TempDir dir;
  dir.write("x.txt", "1\n2\n3\n4\n5\n6\n7\n8\n9\n10\n");
  CHECK(tscx(dir, "analyze --bogus x.txt").code == 1);
  CHECK(tscx(dir, "analyze --metric entropy x.txt").code == 1);
  CHECK(tscx(dir, "analyze").code == 1);
  CHECK(tscx(dir, "mse --scales 3,2 x.txt").code == 1);
  CHECK(tscx(dir, "reproduce table9").code == 1);
  CHECK(tscx(dir, "plot missing.csv").code == 1);
  const auto r = tscx(dir, R"(generate --spec '{"kind":"arma","params":{"ar":[1.5]},"length":10}')");
  CHECK(r.code == 1);
  CHECK(r.err.find("unstable process") != std::string::npos);
}

TEST_CASE("data and numerical errors", "[cli]") {
  TempDir dir;
  SECTION("missing file") {
    const auto r = tscx(dir, "analyze nowhere.txt");
    CHECK(r.code == 2);
    CHECK(r.out.find("error: ") != std::string::npos);
  }
  SECTION("unparseable line") {
    dir.write("bad.txt", "1\n2\nabc\n");
    const auto r = tscx(dir, "analyze bad.txt");
    CHECK(r.code == 2);
    CHECK(r.err.find(":3:") != std::string::npos);
  }
  SECTION("no template matches") {
    dir.write("spread.txt", "0\n10\n25\n47\n80\n");
    const auto r = tscx(dir, "analyze --metric sampen spread.txt");
    CHECK(r.code == 3);
    CHECK(r.out.find("numerical error: ") != std::string::npos);
  }
  SECTION("partial failure keeps the good cells") {
    std::string flat;
    for (int i = 0; i < 40; ++i) flat += "2\n";
    dir.write("flat.txt", flat);
    const auto r = tscx(dir, "analyze --format csv flat.txt nowhere.txt");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.out.find("flat,1,permen,0,") != std::string::npos);
    CHECK(r.out.find("nowhere,1,sampen,,,,,error: ") != std::string::npos);
  }
}

TEST_CASE("analyze and mse output", "[cli]") {
  TempDir dir;
  const auto csv = tscx(dir, std::string("mse --spec ") + kNormalSpec);
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("label,scale,metric,value,statistic,df,p_value,warnings\n", 0) == 0);
  CHECK(count_lines(csv.out) == 1 + 6 * 4);
  CHECK(csv.out.find("normal,10,runstest,") != std::string::npos);

  const auto again = tscx(dir, std::string("mse --spec ") + kNormalSpec);
  CHECK(again.out == csv.out);

  const auto json = tscx(dir, std::string("analyze --format json --metric permen,permtest --spec ") + kNormalSpec);
  REQUIRE(json.code == 0);
  CHECK(json.out.find("\"metric\": \"permtest\"") != std::string::npos);

  // Scale 3 gives {2, 5} when the remainder is dropped and {2, 5, 0} when it is kept.
  dir.write("seven.txt", "1\n2\n3\n4\n5\n6\n0\n");
  const auto dropped = tscx(dir, "mse --metric permen --scales 1,3 --n 2 seven.txt");
  const auto kept = tscx(dir, "mse --metric permen --scales 1,3 --n 2 --average-remainder seven.txt");
  CHECK(dropped.out.find("seven,3,permen,0,") != std::string::npos);
  CHECK(kept.out.find("seven,3,permen,1,") != std::string::npos);

  const auto reseeded = tscx(dir, std::string("analyze --seed 5 --spec ") + kNormalSpec);
  CHECK(reseeded.out != tscx(dir, std::string("analyze --spec ") + kNormalSpec).out);
}

TEST_CASE("generate", "[cli]") {
  TempDir dir;
  const char* spec = R"(--spec '{"kind":"logistic_map","params":{"r":3.5,"x0":0.3},"length":8,"burn_in":4000}')";
  const auto r = tscx(dir, std::string("generate ") + spec);
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("0.38281968301732416\n0.8269407065914387\n", 0) == 0);
  CHECK(count_lines(r.out) == 8);

  REQUIRE(tscx(dir, std::string("generate --out a.txt ") + spec).code == 0);
  const auto scored = tscx(dir, "analyze --metric permen a.txt");
  CHECK(scored.code == 0);
  CHECK(scored.out.find("a,1,permen,") != std::string::npos);
}

TEST_CASE("reproduce", "[cli]") {
  TempDir dir;
  const auto skipped = tscx(dir, "reproduce santafe");
  CHECK(skipped.code == 0);
  CHECK(skipped.out.rfind("santafe: skipped (", 0) == 0);

  const auto t2 = tscx(dir, "reproduce table2 --replications 3 --format json");
  REQUIRE(t2.code == 0);
  CHECK(t2.err.find("PASS r=3.5 sampen") != std::string::npos);
  CHECK(t2.err.find("checks passed") != std::string::npos);
  CHECK(t2.out == tscx(dir, "reproduce table2 --replications 3 --format json").out);
}

TEST_CASE("compare-groups and plot", "[cli]") {
  TempDir dir;
  std::string group_a, group_b;
  for (int k = 0; k < 3; ++k) {
    const auto a = "a" + std::to_string(k) + ".txt";
    const auto b = "b" + std::to_string(k) + ".txt";
    REQUIRE(tscx(dir, R"(generate --spec '{"kind":"arma","params":{"ar":[0.9]},"length":500}' --seed )" +
                          std::to_string(10 + k) + " --out " + a)
                .code == 0);
    REQUIRE(tscx(dir, R"(generate --spec '{"kind":"normal","length":500}' --seed )" + std::to_string(20 + k) +
                          " --out " + b)
                .code == 0);
    group_a += " " + a;
    group_b += " " + b;
  }
  const auto r = tscx(dir, "compare-groups --name-a AR --name-b WN --plot box.svg --format json --out cmp.json --group-a" + group_a +
                               " --group-b" + group_b);
  REQUIRE(r.code == 0);
  const auto report = slurp(dir.path() / "cmp.json");
  CHECK(report.find("\"label\": \"welch\"") != std::string::npos);
  const auto svg = slurp(dir.path() / "box.svg");
  CHECK(svg.find("<svg") != std::string::npos);

  const auto plotted = tscx(dir, "plot cmp.json --kind box_by_group");
  REQUIRE(plotted.code == 0);
  CHECK(plotted.out == svg);
  CHECK(tscx(dir, "plot cmp.json --kind box_by_group").out == plotted.out);
  CHECK(tscx(dir, "compare-groups --group-a a0.txt --group-b" + group_b).code == 1);

  REQUIRE(tscx(dir, std::string("mse --out sweep.json --format json --spec ") + kNormalSpec).code == 0);
  const auto lines = tscx(dir, "plot sweep.json --kind line_by_scale");
  CHECK(lines.code == 0);
  CHECK(lines.out.find("<polyline") != std::string::npos);
}
