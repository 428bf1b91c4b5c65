#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "test_support.hpp"

namespace dks {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run_cli(const std::string &args) {
  const auto out = test::scratch_dir() / "cli_out.txt";
  const auto err = test::scratch_dir() / "cli_err.txt";
  const std::string cmd = std::string(DKS_CLI_PATH) + " " + args + " >" + out.string() + " 2>" +
                          err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string triangle_file() { return test::write_file("cli_tri.txt", "0 1\n1 2\n2 0\n").string(); }

TEST(Cli, SolveTriangle) {
  const auto r = run_cli("solve --graph " + triangle_file() + " --k 2");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("normalized_density: 1\n"), std::string::npos) << r.out;
}

TEST(Cli, SolveJsonReportsOriginalLabels) {
  const auto g = test::write_file("cli_lab.txt", "100 200\n200 300\n300 100\n300 7\n");
  const auto r = run_cli("solve --graph " + g.string() + " --k 3 --output json");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["vertices"], nlohmann::json::array({100, 200, 300}));
  EXPECT_EQ(j["normalized_density"], 1.0);
}

TEST(Cli, SolveJsonIsReproducibleApartFromTiming) {
  std::mt19937_64 rng(1);
  std::string text;
  for (int i = 0; i < 200; ++i)
    text += std::to_string(rng() % 60) + " " + std::to_string(rng() % 60) + "\n";
  const auto g = test::write_file("cli_rand.txt", text).string();
  for (const std::string solver : {"fw", "param", "greedy", "rank1"}) {
    const std::string args = "solve --graph " + g + " --k 8 --seed 3 --output json --solver " + solver;
    auto a = nlohmann::json::parse(run_cli(args).out);
    auto b = nlohmann::json::parse(run_cli(args).out);
    a.erase("wall_time_s");
    b.erase("wall_time_s");
    EXPECT_EQ(a.dump(), b.dump()) << solver;
  }
}

TEST(Cli, SolveExitCodes) {
  EXPECT_EQ(run_cli("solve --graph " + triangle_file() + " --k 0").code, 2);
  EXPECT_EQ(run_cli("solve --graph " + triangle_file() + " --k 4").code, 2);
  EXPECT_EQ(run_cli("solve --graph " + triangle_file() + " --k 2 --solver nope").code, 2);
  EXPECT_EQ(run_cli("solve --k 2").code, 2);
  EXPECT_EQ(run_cli("solve --graph /nonexistent/g.txt --k 2").code, 3);
  const auto bad = test::write_file("cli_bad.txt", "0 1\n1 two\n");
  const auto r = run_cli("solve --graph " + bad.string() + " --k 2");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  EXPECT_EQ(run_cli("solve --graph " + triangle_file() + " --k 2 --solver param --lr 1e308").code, 4);
}

TEST(Cli, SweepWritesOneRowPerCell) {
  const auto out = test::scratch_dir() / "sweep.csv";
  const auto g = test::write_file("cli_tri2.txt", "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n2 3\n");
  const auto r = run_cli("sweep --graph " + g.string() +
                         " --k-list 2,3,4 --solvers fw,greedy,rank1 --jobs 2 --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string text = slurp(out);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 9);
  EXPECT_NE(text.find("upper_bound"), std::string::npos);
}

TEST(Cli, SweepJsonFormat) {
  const auto out = test::scratch_dir() / "sweep.json";
  const auto r = run_cli("sweep --graph " + triangle_file() +
                         " --k-list 2,3 --solvers fw,param --format json --out " + out.string());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(slurp(out)).size(), 4u);
}

TEST(Cli, SweepErrors) {
  const auto out = (test::scratch_dir() / "never.csv").string();
  EXPECT_EQ(run_cli("sweep --graph " + triangle_file() + " --k-list 2 --solvers fw,admm --out " + out).code, 2);
  const auto r = run_cli("sweep --graph " + triangle_file() + " --k-list 2,9 --solvers fw --out " + out);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("k=9"), std::string::npos);
  EXPECT_EQ(run_cli("sweep --graph " + triangle_file() + " --k-list 2 --solvers fw --out /nonexistent/x.csv").code, 3);
}

TEST(Cli, VerifySuites) {
  const auto m = run_cli("verify --suite motzkin --max-n 6");
  EXPECT_EQ(m.code, 0) << m.out;
  EXPECT_NE(m.out.find("PASS motzkin"), std::string::npos);
  const auto r = run_cli("verify --suite rounding --seed 7");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto t = run_cli("verify --suite tightness --max-n 6");
  EXPECT_EQ(t.code, 0) << t.out;
  EXPECT_NE(t.out.find("PASS relaxation-gap"), std::string::npos) << t.out;
  EXPECT_EQ(run_cli("verify --suite bogus").code, 2);
}

TEST(Cli, ScoreExternalSelection) {
  const auto g = test::write_file("cli_score.txt", "10 20\n20 30\n30 10\n30 40\n");
  const auto sel = test::write_file("cli_sel.txt", "10\n20\n30\n");
  const auto r = run_cli("score --graph " + g.string() + " --selection " + sel.string() +
                         " --name admm --output json");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["solver"], "admm");
  EXPECT_EQ(j[0]["normalized_density"], 1.0);
  const auto missing = test::write_file("cli_sel_bad.txt", "10\n77\n");
  EXPECT_EQ(run_cli("score --graph " + g.string() + " --selection " + missing.string()).code, 3);
}

} // namespace
} // namespace dks
