#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RFOREST_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string fx(const std::string& name) {
  return std::string(RFOREST_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("space verbs") {
  auto r = run_cli("space check " + fx("x3.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "{\"valid\":true,\"diameter\":\"2\"}\n");

  CHECK(run_cli("space diameter " + fx("interval10.json")).out ==
        "{\"diameter\":\"10\"}\n");

  auto bad = run_cli("space check " + fx("k1.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"valid\":false") != std::string::npos);
}

TEST_CASE("element verbs") {
  const std::string sp = " --space " + fx("x3.json");
  auto r = run_cli("elem dist" + sp + " --a " + fx("k1.json") + " --b " +
                   fx("k3.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "{\"d\":\"2\"}\n");

  r = run_cli("elem dist" + sp + " --a " + fx("k1.json") + " --b " +
              fx("l_b.json") + " --trunc 2");
  CHECK(r.out == "{\"d\":\"INF\",\"d_trunc\":\"2\"}\n");

  r = run_cli("elem meet" + sp + " --a " + fx("k1.json") + " --b " +
              fx("k3.json"));
  CHECK(r.out.find("{\"r\":\"0\",\"x\":\"a\"}") != std::string::npos);

  // 3/2 is not a breakpoint time, so the restriction stops at 1.
  r = run_cli("elem restrict" + sp + " --a " + fx("k2.json") + " --r 3/2");
  CHECK(r.out ==
        "{\"breakpoints\":[{\"r\":\"0\",\"x\":\"a\",\"label\":0},"
        "{\"r\":\"1\",\"x\":\"b\"}]}\n");

  CHECK(run_cli("elem tp" + sp + " --a " + fx("k2.json")).out ==
        "{\"x\":\"c\"}\n");
}

TEST_CASE("interval and tree verbs") {
  const std::string sp = " --space " + fx("x3.json");
  auto r = run_cli("interval enum" + sp + " --k " + fx("k3.json") + " --kp " +
                   fx("k2.json"));
  CHECK(r.out.find("\"positions\":[\"0\",\"1\",\"2\",\"3\"]") !=
        std::string::npos);

  r = run_cli("interval delta" + sp + " --k " + fx("k3.json") + " --kp " +
              fx("k2.json") + " --r 3 --a " + fx("k5.json"));
  CHECK(r.out == "{\"delta\":\"2\"}\n");

  r = run_cli("interval project" + sp + " --k " + fx("k3.json") + " --kp " +
              fx("k2.json") + " --a " + fx("k5.json"));
  CHECK(r.out.find("\"dist\":\"1\"") != std::string::npos);

  r = run_cli("tree project" + sp + " --tree " + fx("tree_x3.json") + " --a " +
              fx("k5.json"));
  CHECK(r.out.find("\"dist\":\"1\"") != std::string::npos);

  r = run_cli("tree ccl" + sp + " --elem " + fx("k3.json") + " " +
              fx("k2.json") + " " + fx("k6.json"));
  CHECK(r.code == 0);
  // Five elements in the closure.
  std::size_t count = 0;
  for (std::size_t pos = 0;
       (pos = r.out.find("\"breakpoints\"", pos)) != std::string::npos; ++pos) {
    ++count;
  }
  CHECK(count == 5);
}

TEST_CASE("path verbs") {
  auto r = run_cli("path parallel --space " + fx("x3.json") + " --f " +
                   fx("ab_path_x3.json") + " --radius 1/2 --eps 1/2 --sample a");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"gamma\":\"65/64\"") != std::string::npos);
  CHECK(r.out.find("\"points\":[\"a\"]") != std::string::npos);
  CHECK(r.out.find("\"entourage_test\":true") != std::string::npos);

  r = run_cli("path test --space " + fx("x3.json") + " --f " +
              fx("ab_path_x3.json") + " --g " + fx("ab_path_x3.json") +
              " --radius 1/2 --eps 1/4");
  CHECK(r.out == "{\"related\":true}\n");

  CHECK(run_cli("path axioms --metric " + fx("tripod_metric.json") + " --r 3")
            .out == "{\"holds\":false}\n");
  CHECK(run_cli("path axioms --metric " + fx("arc_metric.json") + " --r 4")
            .out == "{\"holds\":true}\n");
}

TEST_CASE("type verbs") {
  const std::string base = " --space " + fx("x3.json") + " --model " +
                           fx("model_x3.json");
  auto r = run_cli("types dist" + base + " --t1 " + fx("t1_type.json") +
                   " --t2 " + fx("t2_type.json"));
  CHECK(r.out == "{\"d\":\"2\"}\n");

  r = run_cli("types oracle" + base + " --t1 " + fx("t1_type.json") +
              " --t2 " + fx("t2_type.json"));
  CHECK(r.out == "{\"d\":\"2\",\"symbolic\":\"2\",\"agree\":true}\n");

  r = run_cli("types dist" + base + " --t1 " + fx("q_a.json") + " --t2 " +
              fx("q_b.json"));
  CHECK(r.out == "{\"d\":\"1\"}\n");
}

TEST_CASE("property runner") {
  auto r = run_cli("prop run --suite parallel-paths --seed 7 --cases 50 --space " +
                   fx("interval10.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"suite\":\"parallel-paths\"") != std::string::npos);
  CHECK(r.out.find("\"cases\":50") != std::string::npos);
  CHECK(r.out.find("\"violations\":[]") != std::string::npos);

  // Identical runs agree byte for byte apart from the wall clock.
  auto a = run_cli("prop run --suite meet-bounds --seed 3 --cases 40 --space " +
                   fx("tail.json"));
  auto b = run_cli("prop run --suite meet-bounds --seed 3 --cases 40 --space " +
                   fx("tail.json"));
  auto strip = [](std::string s) {
    auto cut = s.find("\"wall_ms\"");
    return s.substr(0, cut);
  };
  CHECK(a.code == 0);
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("exit codes") {
  CHECK(run_cli("bogus").code == 2);
  CHECK(run_cli("prop run --suite nope --cases 1 --space " + fx("x3.json"))
            .code == 2);
  CHECK(run_cli("elem dist --space " + fx("x3.json") + " --a " +
                fx("x3.json") + " --b " + fx("k1.json"))
            .code == 1);
}
