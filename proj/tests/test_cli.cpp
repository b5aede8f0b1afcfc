#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int rc = -1;
  std::string out, err;
};

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("cartanlab_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  auto err = scratch() / "stderr.txt";
  std::string cmd = std::string(CARTANLAB_BIN) + " " + args + " 2>" + err.string();
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t k;
  while ((k = std::fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int status = ::pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = slurp(err);
  return r;
}

fs::path write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("catalog list and emit") {
  auto r = run("catalog list --n 4");
  REQUIRE(r.rc == 0);
  CHECK(json::parse(r.out)["labels"].size() >= 20);
  r = run("catalog emit --label so1n_an --n 5");
  REQUIRE(r.rc == 0);
  auto j = json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["basis"].size() == 5);
  r = run("catalog emit --label T9.9");
  CHECK(r.rc == 2);
  CHECK(r.err.find("unknown-label") != std::string::npos);
  r = run("catalog emit --label P2.10 --n 4 --param p=1/2 --param omega=alpha");
  CHECK(r.rc == 0);
  CHECK(run("catalog emit --label P2.10 --n 4 --param bogus=1").rc == 2);
}

TEST_CASE("classify verdicts") {
  auto hb = scratch() / "hb.json";
  REQUIRE(run("catalog emit --label h_B --n 4 --out " + hb.string()).rc == 0);
  auto r = run("classify " + hb.string());
  REQUIRE(r.rc == 0);
  CHECK(json::parse(r.out)["ck"]["verdict"] == "HasCompactForm");
  CHECK(r.err.find("HasCompactForm") != std::string::npos);

  auto so = scratch() / "so.json";
  REQUIRE(run("catalog emit --label so1n_an --n 5 --out " + so.string()).rc == 0);
  r = run("classify " + so.string());
  REQUIRE(r.rc == 0);
  CHECK(json::parse(r.out)["ck"]["verdict"] == "NoCompactForm");

  auto torus = write("torus.json", R"({"ambient":"so2n","n":4,"basis":[{"t1":2,"t2":1}]})");
  r = run("classify " + torus.string());
  REQUIRE(r.rc == 0);
  CHECK(json::parse(r.out)["ck"]["verdict"] == "NoCompactForm");
  CHECK(r.err.find("Prop 3.7") != std::string::npos);

  auto odd = write("odd.json", R"({"ambient":"so2n","n":5,"basis":[{"t1":1,"t2":1},{"eta":1},
      {"x":[1,0,0],"y":[0,-1,0]},{"x":[0,1,0],"y":[1,0,0]}]})");
  r = run("classify " + odd.string());
  CHECK(json::parse(r.out)["ck"]["verdict"] == "ConjecturalNo-SU1m");
  r = run("classify --assume-su-conjecture " + odd.string());
  CHECK(json::parse(r.out)["ck"]["verdict"] == "NoCompactForm");
}

TEST_CASE("classify input errors") {
  CHECK(run("classify " + (scratch() / "missing.json").string()).rc == 2);
  auto bad = write("bad.json", R"({"ambient":"so2n","n":4,"basis":[{"x":[1]}]})");
  auto r = run("classify " + bad.string());
  CHECK(r.rc == 2);
  CHECK(r.err.find("basis[0].x") != std::string::npos);
  auto open = write("open.json", R"({"ambient":"so2n","n":4,"basis":[{"phi":1},{"y":[1,0]}]})");
  CHECK(run("classify " + open.string()).rc == 2);
}

TEST_CASE("conjsu") {
  auto J = write("J.json", "[[0,1],[-1,0]]");
  auto r = run("conjsu --matrix " + J.string());
  REQUIRE(r.rc == 0);
  CHECK(json::parse(r.out)["conjugate_to_block_form"] == true);
  auto nb = write("nb.txt", "0 2 0 0\n-1 0 0 0\n0 0 0 1\n0 0 -1 0\n");
  r = run("conjsu --matrix " + nb.string());
  REQUIRE(r.rc == 0);
  CHECK(json::parse(r.out)["conjugate_to_block_form"] == false);
  auto odd = write("odd.txt", "0 1 0\n-1 0 0\n0 0 1\n");
  CHECK(run("conjsu --matrix " + odd.string()).rc == 2);
}

TEST_CASE("mu sampling is reproducible") {
  auto a = scratch() / "a.csv", b = scratch() / "b.csv";
  auto r1 = run("mu h_B --n 4 --out " + a.string());
  auto r2 = run("mu h_B --n 4 --out " + b.string());
  REQUIRE(r1.rc == 0);
  REQUIRE(r2.rc == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(r1.out == r2.out);
  CHECK(slurp(a).rfind("direction_id,t,u1,u2\n", 0) == 0);
  auto j = json::parse(r1.out);
  CHECK(j["window"]["p"].get<double>() == Catch::Approx(2).margin(0.05));
  // a unipotent group never reaches the fitting range
  CHECK(run("mu T2.5-1 --n 4").rc == 3);
}

TEST_CASE("proper and sl3 subcommands") {
  auto r = run("proper --left 'SO(1,n)' --right h_B --n 4");
  REQUIRE(r.rc == 0);
  auto j = json::parse(r.out);
  CHECK(j["predicted"] == "proper");
  CHECK(j["slope"].get<double>() >= 0.4);
  r = run("sl3 bplus-cross --label sl3:sl2-top-left --t-max 10 --steps 5");
  REQUIRE(r.rc == 0);
  for (auto& m : json::parse(r.out)["minima"])
    if (m["t"].get<double>() >= 5) CHECK(m["min_distance"].get<double>() <= 0.05);
  r = run("sl3 mu-perturb --samples 50");
  CHECK(r.rc == 0);
  CHECK(run("frobnicate").rc == 2);
}
