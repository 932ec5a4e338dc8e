#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch() {
  auto d = fs::temp_directory_path() / ("exhopf_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

Run exhopf(const std::string& args, const std::string& env = {}, const std::string& stdin_text = {}) {
  auto dir = scratch();
  auto err = dir / "stderr.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + std::string("'") + EXHOPF_CLI_PATH + "' " + args + " 2>'" + err.string() + "'";
  if (!stdin_text.empty()) {
    auto in = dir / "stdin.txt";
    std::ofstream(in) << stdin_text;
    cmd += " <'" + in.string() + "'";
  }
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.err = slurp(err);
  return r;
}

const char* kPairs[] = {"G2:2", "F4:2", "E6:2", "E7:2", "E8:2", "F4:3", "E6:3", "E7:3", "E8:3", "E8:5"};

}  // namespace

TEST(Cli, GoldenReports) {
  for (std::string pair : kPairs) {
    std::string name = pair;
    name[name.find(':')] = '_';
    auto golden = fs::path(EXHOPF_FIXTURE_DIR) / "golden" / (name + ".json");
    ASSERT_TRUE(fs::exists(golden)) << golden;
    auto r = exhopf("all --pairs " + pair + " --format json");
    EXPECT_EQ(r.out, slurp(golden)) << pair;
  }
}

TEST(Cli, JobsDoNotChangeTheReport) {
  auto one = exhopf("all --format json --jobs 1");
  auto four = exhopf("all --format json --jobs 4");
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(one.status, four.status);
  auto j = json::parse(one.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["pairs"].size(), 10u);
}

TEST(Cli, SmallestPair) {
  auto r = exhopf("all --pairs G2:2");
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.rfind("(G2,2) PASS\n", 0), 0u);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FailingSectionIsNamed) {
  auto r = exhopf("all --pairs E8:5,E7:2");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("(E7,2) bst"), std::string::npos) << r.err;
}

TEST(Cli, ListedTableE7AtThree) {
  auto r = exhopf("lemma22 --group E7 --prime 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "(E7,3) PASS, 6 nonzero entries\n");
}

TEST(Cli, BstJson) {
  auto r = exhopf("bst --group E7 --prime 3 --format json");
  ASSERT_EQ(r.status, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "PASS");
  bool seen = false;
  for (auto& e : j["entries"])
    if (e["s"] == 6 && e["t"] == 10) {
      EXPECT_EQ(e["b"], -1);
      EXPECT_EQ(e["k"], 2);
      seen = true;
    }
  EXPECT_TRUE(seen);

  auto single = exhopf("bst --group G2 --prime 2 --s 2 --t 3 --strategy method1");
  EXPECT_EQ(single.out, "b(2,3) = 1  k=1  method1\nverdict PASS\n");
  EXPECT_EQ(exhopf("bst --group G2 --prime 2 --s 3 --t 2").status, 2);
}

TEST(Cli, Wu) {
  auto r = exhopf("wu --p 3 --k 1 --m 2 --check-prop51");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("prop51 PASS"), std::string::npos);
  auto j = json::parse(exhopf("wu --p 2 --k 1 --m 2 --format json").out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["p"], 2);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["monomial"], "c3");
  EXPECT_EQ(j["terms"][1]["monomial"], "c2*c1");
}

TEST(Cli, GroebnerAndNormalForm) {
  auto dir = scratch();
  std::ofstream(dir / "gens.txt") << "# theta2 of G2\nw1^2+w1*w2+w2^2\n";
  auto gb = exhopf("gb --ring 'F2[w1,w2]' --gens '" + (dir / "gens.txt").string() + "' --truncate 3 --output '" +
                   (dir / "basis.txt").string() + "'");
  ASSERT_EQ(gb.status, 0) << gb.err;
  auto nf = exhopf("nf --against '" + (dir / "basis.txt").string() + "'", {}, "w1^3+w1^2*w2+w1*w2^2\nw1^3\n");
  ASSERT_EQ(nf.status, 0) << nf.err;
  EXPECT_EQ(nf.out, "0\nw1^3\n");
  EXPECT_EQ(exhopf("gb --ring 'Q[x]' --gens '" + (dir / "gens.txt").string() + "' --truncate 2").status, 2);
}

TEST(Cli, Steenrod) {
  auto dir = scratch();
  std::ofstream(dir / "w.txt") << "# ring F2[w1:1,w2:1]\nw1^2+w1*w2+w2^2\n";
  auto r = exhopf("steenrod --mode weight --p 2 --k 1 --in '" + (dir / "w.txt").string() + "'");
  EXPECT_EQ(r.out, "w2^2*w1+w2*w1^2\n");
  std::ofstream(dir / "c.txt") << "# ring F2[c1:1,c2:2,c3:3]\nc2\n";
  r = exhopf("steenrod --mode chern --p 2 --k 1 --in '" + (dir / "c.txt").string() + "'");
  EXPECT_EQ(r.out, "c3+c2*c1\n");
  EXPECT_EQ(exhopf("steenrod --mode chern --p 3 --k 1 --in '" + (dir / "c.txt").string() + "'").status, 2);
}

TEST(Cli, DataProfile) {
  auto j = json::parse(exhopf("data --group E8 --prime 3 --dump profile --format json").out);
  EXPECT_EQ(j["dim"], 248);
  EXPECT_EQ(j["rank"], 8);
  EXPECT_EQ(j["k"]["10"], 3);
  EXPECT_EQ(j["distinguished_weight"], 2);
  auto th = exhopf("data --group F4 --prime 2 --dump theta --format json");
  EXPECT_EQ(json::parse(th.out)["theta"]["12"], "c6^2+c4^3");
  EXPECT_EQ(exhopf("data --group G2 --prime 3 --dump profile").status, 2);
}

TEST(Cli, HopfCoproductAndDump) {
  auto j = json::parse(exhopf("hopf --group E8 --prime 2 --coproduct 15 --format json").out);
  EXPECT_EQ(j["coproduct"], "x6|a9+x10|a5+x6^2|a3");
  EXPECT_EQ(j["solver"]["status"], "unique");
  EXPECT_EQ(j["solver"]["value"], j["coproduct"]);

  auto d = json::parse(exhopf("hopf --group E8 --prime 5 --dump --format json").out);
  EXPECT_EQ(d["basis_dim"], 1280);
  EXPECT_EQ(d["generators"]["even"][0]["t"], 6);
  EXPECT_EQ(d["generators"]["even"][0]["k_t"], 5);
  EXPECT_EQ(d["tables"]["bockstein"]["a11"], "-x12");

  EXPECT_EQ(exhopf("hopf --group G2 --prime 2").status, 2);
  EXPECT_EQ(exhopf("hopf --group G2 --prime 2 --check").status, 0);
}

TEST(Cli, FixtureOverride) {
  auto empty = scratch() / "no_fixtures";
  fs::create_directories(empty);
  auto r = exhopf("all --pairs G2:2", "EXHOPF_FIXTURES='" + empty.string() + "'");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("(G2,2) theta"), std::string::npos) << r.err;
}
