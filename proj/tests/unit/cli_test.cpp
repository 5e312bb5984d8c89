#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "exclusivity/scenario_io.hpp"

namespace fs = std::filesystem;
using excl::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (fs::path(EXCLUSIVITY_TEST_DATA) / name).string(); }

fs::path temp_file(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("exclusivity_cli_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, BoundsBuiltinsAndFiles) {
  const auto k = call({"bounds", "kcbs"});
  EXPECT_EQ(k.code, 0) << k.err;
  EXPECT_NE(k.out.find("2.2360680"), std::string::npos);
  EXPECT_NE(k.out.find("3.9442719"), std::string::npos);
  const auto f = call({"bounds", data("kcbs.scenario")});
  EXPECT_EQ(f.code, 0) << f.err;
  EXPECT_NE(f.out.find("2.2360680"), std::string::npos);
  EXPECT_EQ(call({"bounds", "chsh"}).code, 0);
  EXPECT_EQ(call({"bounds", "specker"}).code, 0);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"verify", "bogus"}).code, 2);
  EXPECT_EQ(call({"bounds", "/nonexistent/x.scenario"}).code, 2);
  const auto bad = call({"bounds", data("bad.scenario")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
  EXPECT_EQ(call({"--format", "xml", "report"}).code, 2);
  EXPECT_EQ(call({"--tol", "-1", "report"}).code, 2);
  EXPECT_EQ(call({"theta", "/nonexistent/g"}).code, 2);
}

TEST(Cli, ThetaOfGraphFile) {
  const auto r = call({"theta", data("c5.graph")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2.2360680"), std::string::npos);
  const auto j = call({"theta", data("c5.graph"), "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_NO_THROW(EXPECT_TRUE(excl::cli::Json::parse(j.out).is_object()));
}

TEST(Cli, JsonIsRoundTripStable) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "bounds", "kcbs"},
        {"--format", "json", "bounds", "chsh"},
        {"--format", "json", "verify", "chsh"},
        {"--format", "json", "verify", "specker"},
        {"--format", "json", "realize", "kcbs"},
        {"--format", "json", "realize", "chsh"},
        {"--format", "json", "report"}}) {
    const auto r = call(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = excl::cli::Json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out) << args.back();
  }
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  const auto r = call({"realize", "chsh", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = excl::cli::Json::parse(r.out);
  EXPECT_TRUE(j.contains("beta"));
}

TEST(Cli, VerifyAndCorruptedSets) {
  EXPECT_EQ(call({"verify", "kcbs"}).code, 0);
  EXPECT_EQ(call({"verify", "chsh"}).code, 0);
  EXPECT_EQ(call({"verify", "specker"}).code, 0);

  const auto dump = call({"verify", "chsh", "--dump-sets"});
  ASSERT_EQ(dump.code, 0);
  const auto clean = temp_file("clean.sets", dump.out);
  EXPECT_EQ(call({"verify", "chsh", "--sets", clean.string()}).code, 0);

  std::istringstream in(dump.out);
  excl::SetFile f = excl::parse_set_file(in);
  auto& e = f.sets[9].events[1].event;
  std::vector<excl::Assignment> as(e.assignments().begin(), e.assignments().end());
  as[0].outcome = -as[0].outcome;
  e = excl::Event(as);
  std::ostringstream text;
  excl::write_set_file(text, f.scenario, f.sets);
  const auto bad = temp_file("bad.sets", text.str());
  const auto r = call({"verify", "chsh", "--sets", bad.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find(f.sets[9].name), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("not exclusive"), std::string::npos) << r.err;

  // The sets of the other derivation do not prove this one.
  const auto kdump = call({"verify", "kcbs", "--dump-sets"});
  const auto wrong = temp_file("kcbs.sets", kdump.out);
  EXPECT_EQ(call({"verify", "chsh", "--sets", wrong.string()}).code, 1);
  fs::remove(clean);
  fs::remove(bad);
  fs::remove(wrong);
}

TEST(Cli, ReportPasses) {
  const auto r = call({"report"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(excl::cli::reproduction_checks(1e-7).size(), 25u);
}
