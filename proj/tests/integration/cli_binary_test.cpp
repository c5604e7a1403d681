// Runs the installed-style binary as a subprocess and checks the streams and
// exit codes a shell user would see.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

auto quote(const std::string &s) -> std::string {
  std::string q = "'";
  for (char c : s)
    q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

auto slurp(const fs::path &p) -> std::string {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

auto run(const std::vector<std::string> &args) -> Result {
  const auto dir = fs::temp_directory_path() /
                   ("lefschetz_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                          ->random_seed()) +
                    "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  fs::create_directories(dir);
  std::string cmd = quote(LEFSCHETZ_CLI);
  for (const auto &a : args)
    cmd += " " + quote(a);
  cmd += " >" + quote((dir / "out").string()) + " 2>" + quote((dir / "err").string());
  const int status = std::system(cmd.c_str());
  Result r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "out");
  r.err = slurp(dir / "err");
  fs::remove_all(dir);
  return r;
}

} // namespace

TEST(CliBinary, WlpFailureOnFixture) {
  const auto r = run({"wlp", "vars: x,y,z; gens: x^3,y^3,z^3,x*y*z"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.err.empty());
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["holds"], false);
}

TEST(CliBinary, BadPrimesOfDeterminantExample) {
  const auto r = run({"badprimes", "vars: x,y,z; gens: x^14, y^21, z^25, x^2*y^9*z^13"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["primes"],
            nlohmann::json({"2", "3", "5", "11", "13", "19", "23", "29", "5011"}));
  EXPECT_EQ(j["result"]["count"], 9);
}

TEST(CliBinary, MacMahonUnitBox) {
  const auto r = run({"macmahon", "1", "1", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["result"]["value"], "2");
}

TEST(CliBinary, AciWithFigure) {
  const auto svg = fs::temp_directory_path() / "lefschetz_cli_region.svg";
  fs::remove(svg);
  const auto r = run({"aci", "--params", "14,21,25,2,9,13", "--emit-figure", svg.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out)["result"];
  EXPECT_EQ(j["s"], 26);
  EXPECT_EQ(j["det_N"], "-410893744849276115319750");
  EXPECT_EQ(j["abs_dets_equal"], true);
  EXPECT_EQ(j["factorization"]["text"],
            "2 * 3^2 * 5^3 * 11^4 * 13^5 * 19 * 23^3 * 29 * 5011");
  const auto text = slurp(svg);
  EXPECT_EQ(text.rfind("<svg", 0), 0u);
  EXPECT_NE(text.find("<polygon"), std::string::npos);
  fs::remove(svg);
}

TEST(CliBinary, InputErrorExitCode) {
  const auto r = run({"hilbert", "vars: x,y; gens: z^2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("UndeclaredVariable"), std::string::npos);
}

TEST(CliBinary, OutputIsSingleJsonDocument) {
  const auto r = run({"froberg", "--vars", "4", "--degrees", "3,3,3,3,3"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  nlohmann::json j;
  in >> j;
  in >> std::ws;
  EXPECT_TRUE(in.eof());
  EXPECT_EQ(j["result"]["values"], nlohmann::json({1, 4, 10, 15, 15, 6}));
}
