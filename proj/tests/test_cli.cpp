#include "cli.hpp"

#include "lcaframe/serialize.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace lcaframe;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result lca(std::vector<std::string> args) {
  args.insert(args.begin(), "lcaframe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::path(::testing::TempDir()) /
          ("lcaframe_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  std::string file(const std::string& name, const std::string& text) {
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  // Data rows of an emitted CSV, after the comments and the column header.
  static std::vector<std::vector<double>> rows(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::vector<std::vector<double>> out;
    bool header = true;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (header) {
        header = false;
        continue;
      }
      std::vector<double> r;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) r.push_back(std::stod(cell));
      out.push_back(r);
    }
    return out;
  }
  fs::path dir;
};

const char* kHaar = R"({"group":{"variant":"integers"},"M":3,"family":{"bspline":{"order":1}},"k0":0})";
const char* kShannon8 = R"({"group":{"variant":"cyclic","params":{"N":8}},"family":{"charfun":{"mode":"shannon"}}})";
const char* kFigure = R"({"group":{"variant":"integers"},"M":10,"family":{"bspline":{"order":2}},"k0":0})";

}  // namespace

TEST_F(Cli, ConstructWritesSystemAndSummary) {
  auto d = file("z10.json", kFigure);
  auto r = lca({"construct", d, "--out", (dir / "z10.sys.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("21 generator families"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Psi_9^(2)"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "z10.sys.json"));

  auto s = lca({"construct", "--descriptor", file("s8.json", kShannon8)});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("4 generator families"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "s8.system.json"));
}

TEST_F(Cli, InputErrorsExitTwo) {
  auto r = lca({"construct", file("bad.json", "{not json")});
  EXPECT_EQ(r.code, 2);
  r = lca({"construct", file("nogroup.json", R"({"M":3})")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/group"), std::string::npos) << r.err;
  r = lca({"construct", (dir / "missing.json").string()});
  EXPECT_EQ(r.code, 2);
  r = lca({"verify", file("h.json", kHaar), "--suite", "bogus"});
  EXPECT_EQ(r.code, 2);
  r = lca({"frobnicate"});
  EXPECT_EQ(r.code, 2);
}

TEST_F(Cli, PreconditionsExitThree) {
  auto r = lca({"construct", file("p.json",
                                  R"({"group":{"variant":"cyclic","params":{"N":8}},)"
                                  R"("family":{"charfun":{"mode":"proper","L":[0,0,1,7]}},"k0":0})")});
  EXPECT_EQ(r.code, 3) << r.out;
  r = lca({"construct", file("odd.json", R"({"group":{"variant":"integers"},"M":3,"family":{"bspline":{"order":3}}})")});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("odd"), std::string::npos) << r.err;
  r = lca({"emit", file("h.json", kHaar), "--what", "figure1", "--out", dir.string()});
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, VerifyHaarAllPasses) {
  auto r = lca({"verify", file("h.json", kHaar), "--trials", "10", "--out", (dir / "rep.json").string()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  Json rep = Json::parse(slurp(dir / "rep.json"));
  EXPECT_TRUE(rep["passed"].get<bool>());
  std::set<std::string> conditions;
  for (const auto& c : rep["checks"]) {
    EXPECT_LE(c["residual"].get<double>(), 1e-10);
    conditions.insert(c["condition"].get<std::string>());
  }
  EXPECT_EQ(conditions, (std::set<std::string>{"uep-matrix-condition", "refinement-equation", "fiberization",
                                               "telescoping", "parseval", "asymptotic-normalization",
                                               "translate-disjointness"}));
}

TEST_F(Cli, VerifyShannonParseval) {
  auto sys = file("s8.json", kShannon8);
  ASSERT_EQ(lca({"construct", sys, "--out", (dir / "s8.sys.json").string()}).code, 0);
  auto r = lca({"verify", (dir / "s8.sys.json").string(), "--suite", "parseval", "--json"});
  EXPECT_EQ(r.code, 0);
  Json rep = Json::parse(r.out);
  for (const auto& c : rep["checks"]) EXPECT_LE(c["residual"].get<double>(), 1e-12) << c.dump();
}

TEST_F(Cli, CorruptedSystemFailsWithExitOne) {
  Json j = parse_json_text(kHaar, "haar");
  auto loaded = system_from_json(j);
  auto bad = loaded.system.with_filter_zeroed(0, 1);
  auto path = file("bad.sys.json", system_to_json(loaded.descriptor, bad).dump());
  auto r = lca({"verify", path, "--suite", "uep", "--json"});
  EXPECT_EQ(r.code, 1);
  Json rep = Json::parse(r.out);
  EXPECT_FALSE(rep["passed"].get<bool>());
  EXPECT_NEAR(rep["checks"][0]["residual"].get<double>(), 2.0, 1e-12);
}

TEST_F(Cli, EuclideanParsevalIsSkipped) {
  auto d = file("r2.json", R"({"group":{"variant":"euclidean","params":{"s":2}},"M_table":[[2,2],[2,2]],)"
                           R"("family":{"charfun":{"mode":"shannon"}}})");
  auto r = lca({"verify", d, "--suite", "parseval"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("SKIP"), std::string::npos);
  EXPECT_NE(r.out.find("out of desk-scale scope"), std::string::npos);
}

TEST_F(Cli, EmitGeneratorsShannon) {
  auto r = lca({"emit", file("s8.json", kShannon8), "--what", "generators", "--out", (dir / "gen").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir / "gen")) {
    ++files;
    EXPECT_EQ(rows(e.path()).size(), 8u) << e.path();
    EXPECT_EQ(rows(e.path())[0].size(), 3u);
  }
  EXPECT_EQ(files, 4);
  const std::string text = slurp(dir / "gen" / "phi_0.csv");
  EXPECT_EQ(text.rfind("# lcaframe emit generators Phi_0\n# descriptor-hash 0x", 0), 0u) << text;
  EXPECT_NE(text.find("# seed 0x5EED"), std::string::npos);
}

TEST_F(Cli, EmitFigureOneHasZeroMeanAndIsDeterministic) {
  auto d = file("z10.json", kFigure);
  ASSERT_EQ(lca({"emit", d, "--what", "figure1", "--out", (dir / "a").string()}).code, 0);
  ASSERT_EQ(lca({"emit", d, "--what", "figure1", "--out", (dir / "b").string()}).code, 0);
  for (const char* f : {"figure1_psi1.csv", "figure1_psi2.csv"}) {
    auto v = rows(dir / "a" / f);
    ASSERT_FALSE(v.empty());
    double sum = 0;
    for (const auto& row : v) sum += row[1];
    EXPECT_NEAR(sum, 0.0, 1e-12) << f;
    EXPECT_EQ(slurp(dir / "a" / f), slurp(dir / "b" / f));
  }
}

TEST_F(Cli, EmitTile) {
  auto t = file("tile.json", R"({"tile":{"A":[[1,-1],[1,1]],"eta":[1,0],"r":12}})");
  auto r = lca({"emit", t, "--what", "tile", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(rows(dir / "tile.csv").size(), 4096u);
  auto bad = file("badtile.json", R"({"tile":{"A":[[2,0],[0,2]],"eta":[1,0],"r":3}})");
  EXPECT_EQ(lca({"emit", bad, "--what", "tile"}).code, 3);
  EXPECT_EQ(lca({"emit", file("notile.json", "{}"), "--what", "tile"}).code, 2);
}

TEST_F(Cli, ReportsAreByteIdentical) {
  auto d = file("h.json", kHaar);
  auto a = lca({"verify", d, "--trials", "5", "--seed", "0xABC", "--json"});
  auto b = lca({"verify", d, "--trials", "5", "--seed", "0xABC", "--json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"seed\": \"0xABC\""), std::string::npos);
}
