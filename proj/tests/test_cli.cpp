#include "oracles.hpp"

#include "mmwb/family/param_scheme.hpp"
#include "mmwb/sat/cnf.hpp"
#include "mmwb/sat/encoder.hpp"
#include "mmwb/sat/model.hpp"
#include "mmwb/scheme_io.hpp"
#include "mmwb/symmetry/group.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mmwb;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(MMWB_CLI) + " " + args + " 2>/dev/null";
  FILE* p = ::popen(cmd.c_str(), "r");
  Result r{-1, {}};
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return oracle::fixture(name); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("mmwb_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, VerifyExitCodes) {
  EXPECT_EQ(run("verify " + fx("strassen.json")).code, 0);
  EXPECT_EQ(run("verify " + fx("rank23_z2.json")).code, 0);
  auto t = read_scheme(fx("strassen.json")).summands();
  t.pop_back();
  write_scheme(path("broken.json"), Scheme(Ring::Int, 2, t));
  const Result bad = run("verify " + path("broken.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("INCORRECT"), std::string::npos);
  EXPECT_EQ(run("verify " + path("missing.json")).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("verify").code, 2);
}

TEST_F(CliTest, AbConventionImport) {
  EXPECT_EQ(run("--convention ab verify " + fx("strassen_ab.json")).code, 0);
  EXPECT_EQ(run("verify " + fx("strassen_ab.json")).code, 1);
}

TEST_F(CliTest, WeightAndInvariants) {
  EXPECT_EQ(run("weight " + fx("rank23_z2.json")).out, "219\n");
  const Result inv = run("invariants " + fx("rank23_z2.json"));
  EXPECT_EQ(inv.code, 0);
  EXPECT_NE(inv.out.find("17*x^2 + 52*x^1"), std::string::npos);
}

TEST_F(CliTest, LiftRank23IsUnliftable) {
  const Result r = run("lift " + fx("rank23_z2.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.rfind("UNLIFTABLE", 0), 0U);
  EXPECT_NE(r.out.find("nodes="), std::string::npos);
  EXPECT_EQ(run("lift --budget 1 " + fx("rank23_z2.json")).code, 3);
}

TEST_F(CliTest, LiftStrassenWritesIntScheme) {
  write_scheme(path("z2.json"), reduce_mod2(read_scheme(fx("strassen.json"))));
  const Result r = run("lift " + path("z2.json") + " -o " + path("lifted.json"));
  EXPECT_EQ(r.code, 0);
  const Scheme s = read_scheme(path("lifted.json"));
  EXPECT_EQ(s.ring(), Ring::Int);
  EXPECT_TRUE(verify(s).correct);
}

TEST_F(CliTest, EquivalentWithWitness) {
  Rng rng(3);
  const Scheme s = read_scheme(fx("rank23_z2.json"));
  write_scheme(path("g.json"), sym::apply_group(sym::random_element(3, Ring::Z2, rng), s));
  EXPECT_EQ(run("equivalent " + fx("rank23_z2.json") + " " + path("g.json") + " -o " + path("w.json")).code, 0);
  const auto w = sym::element_from_json(read_json(path("w.json")), 3);
  EXPECT_TRUE(sym::same_up_to_order(sym::apply_group(w, s), read_scheme(path("g.json"))));
  auto t = s.summands();
  t[0] = t[1];
  write_scheme(path("other.json"), Scheme(Ring::Z2, 3, t));
  EXPECT_EQ(run("equivalent " + fx("rank23_z2.json") + " " + path("other.json")).code, 1);
}

TEST_F(CliTest, SimplifyIsDeterministic) {
  run("simplify " + fx("rank23_z2.json") + " --iterations 50 --seed 5 -o " + path("a.json"));
  run("simplify " + fx("rank23_z2.json") + " --iterations 50 --seed 5 -o " + path("b.json"));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  EXPECT_TRUE(verify(read_scheme(path("a.json"))).correct);
}

TEST_F(CliTest, EncodeDecodeRoundTrip) {
  ASSERT_EQ(run("encode --n 2 --m 7 --seed 1 -o " + path("f")).code, 0);
  const auto cnf = sat::CnfFormula::parse_dimacs(slurp(path("f.cnf")));
  const auto vm = sat::VarMap::from_json(read_json(path("f.varmap.json")));
  const Scheme s = reduce_mod2(read_scheme(fx("strassen.json")));
  const sat::Encoding enc = sat::encode_brent(2, 7, {});
  {
    std::ofstream m(path("model.txt"));
    m << "s SATISFIABLE\nv";
    for (int lit : sat::to_model(sat::extend_assignment(s, enc))) m << " " << lit;
    m << " 0\n";
  }
  EXPECT_EQ(cnf.num_vars(), vm.size());
  EXPECT_EQ(run("check-model " + path("f.cnf") + " " + path("model.txt")).code, 0);
  EXPECT_EQ(run("decode " + path("model.txt") + " --varmap " + path("f.varmap.json") + " -o " + path("d.json")).code, 0);
  EXPECT_EQ(read_scheme(path("d.json")), s);
  std::ofstream(path("zero.txt")) << "v 0\n";
  EXPECT_EQ(run("check-model " + path("f.cnf") + " " + path("zero.txt")).code, 2);
}

TEST_F(CliTest, EncodeWithStreamliningIsDeterministic) {
  const std::string args = "encode --n 3 --m 23 --offdiag 0.5 --diag --seed 8 -o ";
  ASSERT_EQ(run(args + path("a")).code, 0);
  ASSERT_EQ(run(args + path("b")).code, 0);
  EXPECT_EQ(slurp(path("a.cnf")), slurp(path("b.cnf")));
  EXPECT_EQ(run("encode --n 3 --m 7 --diag -o " + path("c")).code, 2);
}

TEST_F(CliTest, Families) {
  EXPECT_EQ(run("family-verify " + fx("family17.json")).code, 0);
  auto f = fam::read_family(fx("family17.json"));
  f.entry(2, 0, 0, 0) = -f.entry(2, 0, 0, 0);
  fam::write_family(path("bad.json"), f);
  const Result bad = run("family-verify " + path("bad.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(run("family-eval " + fx("family17.json") + " --point 1,2,3,4,5,6,7,8,9,10,-1,-2,-3,-4,-5,-6,-7 -o " +
                path("pt.json")).code, 0);
  EXPECT_TRUE(verify(read_scheme(path("pt.json"))).correct);
  EXPECT_EQ(run("family-eval " + fx("family17.json") + " --point 1,2 -o " + path("x.json")).code, 2);
}

TEST_F(CliTest, IntroduceParams) {
  ASSERT_EQ(run("classical --n 3 --ring rat -o " + path("c.json")).code, 0);
  ASSERT_EQ(run("introduce-params " + path("c.json") + " --summand 1 --u gamma --v beta -o " + path("f.json")).code, 0);
  EXPECT_GT(fam::read_family(path("f.json")).params(), 0);
  EXPECT_EQ(run("family-verify " + path("f.json")).code, 0);
  EXPECT_EQ(run("introduce-params " + path("c.json") + " --summand 1 --u gamma --v gamma -o " + path("g.json")).code, 2);
}

TEST_F(CliTest, MergeCheck) {
  EXPECT_EQ(run("merge-check " + fx("strassen.json")).code, 1);
  auto t = read_scheme(fx("strassen.json")).summands();
  const Summand x = t[0];
  t[0].c = mpq_class(2) * x.c;
  t.push_back({x.a, x.b, mpq_class(-1) * x.c});
  write_scheme(path("eight.json"), Scheme(Ring::Int, 2, t));
  EXPECT_EQ(run("merge-check " + path("eight.json") + " -o " + path("seven.json")).code, 0);
  EXPECT_EQ(read_scheme(path("seven.json")).m(), 7);
}

TEST_F(CliTest, CatalogPipeline) {
  Rng rng(6);
  const Scheme s = read_scheme(fx("rank23_z2.json"));
  write_scheme(path("a.json"), s);
  write_scheme(path("b.json"), sym::apply_group(sym::random_element(3, Ring::Z2, rng), s));
  const std::string cat = path("cat");
  EXPECT_EQ(run("catalog-add " + path("a.json") + " " + path("b.json") + " --catalog " + cat).code, 0);
  const Result d = run("catalog-dedup --catalog " + cat + " --tables " + path("tab"));
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("1 classes"), std::string::npos) << d.out;
  EXPECT_EQ(slurp(path("tab.poly1.csv")).substr(0, 17), "polynomial,count\n");
  const Result h = run("histogram " + cat);
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out.substr(0, 13), "weight,count\n");
}

TEST_F(CliTest, CatalogRootFromEnvironment) {
  const std::string cat = path("envcat");
  const std::string cmd = "MMWB_CATALOG=" + cat + " " + std::string(MMWB_CLI) + " catalog-add " +
                          fx("rank23_z2.json") + " >/dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(fs::path(cat) / "index.json"));
}

TEST_F(CliTest, SolveWithTemplateAndTimeout) {
  std::ofstream(path("f.cnf")) << "p cnf 1 1\n1 0\n";
  EXPECT_EQ(run("solve " + path("f.cnf") + " --model " + path("m.txt") +
                " --solver \"test -f {cnf} && printf 'v 1 0\\n' > {model}\" --timeout 5").code, 0);
  EXPECT_EQ(run("check-model " + path("f.cnf") + " " + path("m.txt")).code, 0);
  EXPECT_EQ(run("solve " + path("f.cnf") + " --model " + path("m.txt") + " --solver 'sleep 10; echo {cnf}' --timeout 0.3").code, 3);
  std::ofstream(path("cfg.json")) << R"({"solver": {"command": "test -f {cnf} && printf 'v -1 0\n' > {model}", "timeout": 5}})";
  EXPECT_EQ(run("--config " + path("cfg.json") + " solve " + path("f.cnf") + " --model " + path("m2.txt")).code, 0);
  EXPECT_EQ(run("check-model " + path("f.cnf") + " " + path("m2.txt")).code, 1);
  EXPECT_EQ(run("solve " + path("f.cnf") + " --model " + path("m3.txt")).code, 2);
}
