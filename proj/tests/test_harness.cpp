#include <gtest/gtest.h>

#include <cstdlib>

#include <json.hpp>

#include "ctcsa/harness.hpp"

using namespace ctcsa;

namespace {

ErrorCode config_error_code(std::string_view text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

TEST(Config, ShippedFileMatchesBuiltinDefault) {
  const Config file = load_config(CTCSA_SOURCE_DIR "/config/default.json");
  EXPECT_EQ(config_to_json(file), config_to_json(default_config()));
  EXPECT_EQ(config_hash(file), config_hash(default_config()));
}

TEST(Config, Validation) {
  EXPECT_EQ(config_error_code("[]"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("{\"corpus\": 3}"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("{\"extra\": 1}"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("{\"corpus\": [\"nope:1\"]}"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("{\"caps\": {\"order_cap\": 0}}"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("{\"caps\": {\"order_cap\": 100, \"triple_scan_cap\": 200}}"), ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("{\"known_refutations\": [{\"suite\": \"x\", \"subject\": \"a\", \"check\": \"b\"}]}"),
            ErrorCode::ConfigError);
  EXPECT_EQ(config_error_code("{not json"), ErrorCode::ConfigError);
  EXPECT_THROW(load_config("/nonexistent/config.json"), Error);
}

TEST(Config, PartialOverride) {
  const Config c = parse_config(R"({"corpus": ["cyclic:4", {"recipe": "symmetric:3", "nickname": "S3"}]})");
  ASSERT_EQ(c.corpus.size(), 2u);
  EXPECT_EQ(c.corpus[1].nickname, "S3");
  EXPECT_EQ(c.known_refutations.size(), 2u);
  EXPECT_NE(config_hash(c), config_hash(default_config()));
}

TEST(Config, EnvironmentOverridesOrderCap) {
  ::setenv("CTCSA_ORDER_CAP", "5000", 1);
  EXPECT_EQ(default_config().caps.order_cap, 5000u);
  ::setenv("CTCSA_ORDER_CAP", "abc", 1);
  EXPECT_THROW(default_config(), Error);
  ::unsetenv("CTCSA_ORDER_CAP");
  EXPECT_EQ(default_config().caps.order_cap, Caps{}.order_cap);
}

TEST(Report, EmptyRowsGiveValidReport) {
  const auto j = nlohmann::json::parse(emit_json({}, default_config(), false));
  EXPECT_EQ(j["version"], "1");
  EXPECT_TRUE(j["suites"].empty());
  EXPECT_EQ(j["summary"]["rows"], 0);
  EXPECT_EQ(j["header"]["timestamp"], "");
  EXPECT_EQ(emit_markdown({}).find("##"), std::string::npos);
}

TEST(Report, TimestampIsIsolatedInHeader) {
  const auto rows = run_suite("pq-example", default_config());
  auto a = nlohmann::json::parse(emit_json(rows, default_config(), true));
  auto b = nlohmann::json::parse(emit_json(rows, default_config(), false));
  EXPECT_FALSE(a["header"]["timestamp"].get<std::string>().empty());
  a.erase("header");
  b.erase("header");
  EXPECT_EQ(a, b);
}

TEST(Suites, DeterministicAndAnchored) {
  for (const auto& name : {"psl2-ct", "thm41", "char0-witness"}) {
    const auto a = run_suite(name, default_config());
    const auto b = run_suite(name, default_config());
    EXPECT_EQ(emit_json(a, default_config(), false), emit_json(b, default_config(), false)) << name;
    for (const auto& r : a) EXPECT_FALSE(r.anchor.empty()) << r.subject << " " << r.check;
  }
  EXPECT_THROW(run_suite("nope", default_config()), Error);
}

TEST(Suites, RefutationRowsNeedTheConfigListing) {
  Config c = default_config();
  auto rows = run_suite("psl2-ct", c);
  std::size_t refuting = 0;
  for (const auto& r : rows) {
    if (r.paper_claim == PaperClaim::refutes) {
      ++refuting;
      EXPECT_TRUE(r.known_refutation);
      EXPECT_TRUE(r.computed);
      EXPECT_TRUE(r.subject == "psl2:3" || r.subject == "psl2:5") << r.subject;
    }
  }
  EXPECT_EQ(refuting, 2u);
  EXPECT_TRUE(all_passed(rows));
  c.known_refutations.clear();
  EXPECT_FALSE(all_passed(run_suite("psl2-ct", c)));
}

TEST(Suites, CapFailureIsReportedPerRow) {
  Config c = default_config();
  c.corpus = {{"symmetric:5", ""}, {"cyclic:3", ""}};
  c.caps = Caps{100, 100, 100};
  const auto rows = run_suite("csa-abelian", c);
  ASSERT_FALSE(rows.empty());
  EXPECT_FALSE(rows.front().error.empty());
  EXPECT_FALSE(all_passed(rows));
}

TEST(Suites, MarkdownHasOneTablePerSuite) {
  const auto rows = run_suite("psl2-csa", default_config());
  const std::string md = emit_markdown(rows);
  EXPECT_NE(md.find("## psl2-csa"), std::string::npos);
  EXPECT_NE(md.find("| subject | check | expected | computed | paper claim | result | anchor |"), std::string::npos);
}

TEST(Report, WriteFileFailure) { EXPECT_THROW(write_file("/nonexistent/dir/out.json", "x"), Error); }

}  // namespace
