#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clforms/error.hpp"
#include "commands.hpp"
#include "report.hpp"
#include "vertex_file.hpp"

using namespace clforms;
using clforms::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json parse(const Result& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("clforms_cli_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, CountWithOracle) {
  auto r = call({"count", "--q", "2", "--n", "2", "--l", "2", "--formula", "delta", "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = parse(r);
  EXPECT_EQ(j["value"], "2");
  EXPECT_EQ(j["oracle"], "2");
  EXPECT_EQ(j["match"], true);

  r = call({"count", "--q", "2", "--n", "2", "--l", "2", "--formula", "rank_m"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"value\":\"10\"}\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"count", "--q", "6", "--n", "2", "--l", "2", "--formula", "delta"}).code, 2);
  EXPECT_EQ(call({"count", "--q", "2", "--n", "2", "--l", "2", "--formula", "nope"}).code, 2);
  EXPECT_EQ(call({"verify", "/nonexistent/file.vset"}).code, 2);
  EXPECT_EQ(call({"ekr", "--q", "2", "--n", "3", "--l", "3"}).code, 4);
  const auto r = call({"count", "--q", "2", "--n", "3", "--l", "4", "--formula", "delta", "--oracle", "--cap", "10"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, ParseGrid) {
  const auto g = cli::parse_grid("q=2,3;n=2;l=4..6");
  EXPECT_EQ(g.q, (std::vector<unsigned>{2, 3}));
  EXPECT_EQ(g.n, (std::vector<unsigned>{2}));
  EXPECT_EQ(g.l, (std::vector<unsigned>{4, 5, 6}));
  EXPECT_TRUE(g.x.empty());
  EXPECT_EQ(cli::parse_grid("q=2;n=2;l=5;x=2..3").x, (std::vector<std::int64_t>{2, 3}));
  EXPECT_THROW(cli::parse_grid("q=2;n=2"), Error);
  EXPECT_THROW(cli::parse_grid("q=2;n=2;l=5..4"), Error);
  EXPECT_THROW(cli::parse_grid("q=a;n=2;l=4"), Error);
}

TEST(Cli, ConstructThenVerifyRoundTrip) {
  const auto dir = temp_dir();
  const auto file = (dir / "pencil.vset").string();
  auto r = call({"construct", "--q", "2", "--n", "2", "--l", "3", "--kind", "pencil", "--point", "4", "--out", file});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse(r)["size"], "8");

  const auto sp = SpaceParams::make(2, 2, 3);
  AttenuatedSpace space(sp);
  const auto loaded = cli::read_vertex_set_file(file);
  EXPECT_EQ(loaded, space.pencil(4));

  r = call({"verify", file, "--level", "full"});
  ASSERT_EQ(r.code, 0) << r.err;
  VerdictEngine engine(space);
  EXPECT_EQ(r.out, cli::render(cli::to_json(engine.verdict(loaded, Level::Full), sp, Level::Full)));
  EXPECT_EQ(parse(r)["is_cl"], true);
  EXPECT_EQ(parse(r)["x"], "1");
  std::filesystem::remove_all(dir);
}

TEST(Cli, VertexFileErrors) {
  std::istringstream bad_header("clforms-vertexset v2 q=2 n=2 l=2\n");
  EXPECT_THROW(cli::read_vertex_set(bad_header), Error);

  std::istringstream bad_entry("clforms-vertexset v1 q=2 n=2 l=2\n0 0 0 0\n# note\n0 1 2 0\n");
  try {
    cli::read_vertex_set(bad_entry, "t.vset");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("t.vset:4:"), std::string::npos) << e.what();
  }

  std::istringstream dup("clforms-vertexset v1 q=2 n=2 l=2\n1 0 0 1\n\n1 0 0 1\n");
  try {
    cli::read_vertex_set(dup, "d.vset");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("d.vset:4:"), std::string::npos) << e.what();
  }

  std::istringstream short_row("clforms-vertexset v1 q=3 n=2 l=2\n1 0 2\n");
  EXPECT_THROW(cli::read_vertex_set(short_row), Error);
}

TEST(Cli, WriteReadRoundTrip) {
  const auto sp = SpaceParams::make(3, 2, 2);
  VertexSet s(sp);
  for (std::uint64_t v : {0u, 5u, 17u, 80u}) s.insert(v);
  std::stringstream buf;
  cli::write_vertex_set(buf, s, "four vertices");
  EXPECT_EQ(cli::read_vertex_set(buf), s);
}

TEST(Cli, OutputIsIndependentOfThreads) {
  const auto a = call({"--threads", "1", "equivalence", "--q", "2", "--n", "2", "--l", "2"});
  const auto b = call({"--threads", "4", "equivalence", "--q", "2", "--n", "2", "--l", "2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto s1 = call({"--threads", "1", "search", "--q", "2", "--n", "2", "--l", "2", "--x", "1"});
  const auto s4 = call({"--threads", "4", "search", "--q", "2", "--n", "2", "--l", "2", "--x", "1"});
  ASSERT_EQ(s1.code, 0) << s1.err;
  EXPECT_EQ(s1.out, s4.out);
  EXPECT_EQ(parse(s1)["count"], "24");
}

TEST(Cli, ChecksReportFailures) {
  EXPECT_EQ(call({"spectra", "--q", "2", "--n", "2", "--l", "2"}).code, 0);
  const auto e = call({"ekr", "--q", "2", "--n", "2", "--l", "3"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(parse(e)["max_intersecting"], "8");
}
