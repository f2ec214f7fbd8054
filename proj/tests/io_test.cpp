#include "skewjdt/io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "skewjdt/errors.hpp"
#include "skewjdt/report.hpp"

namespace skewjdt {
namespace {

using namespace skewjdt::testing;

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(SKEWJDT_TESTDATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kExampleText =
    "shape: 4,4,4,3/2,2,1\n"
    ". . 0 1\n"
    ". . 1 7\n"
    ". 1 4 9\n"
    "2 9 9\n";

TEST(TextFormatTest, SerializesRunningExample) {
  EXPECT_EQ(serialize_tableau(example_p()), kExampleText);
}

TEST(TextFormatTest, ParsesWithLooseWhitespaceAndComments) {
  const char* text =
      "# P of the running example\n"
      "shape:4,4,4,3 / 2,2,1\n"
      "  . .   0 1\n"
      ". .\t1 7\n"
      ". 1 4 9\n"
      "2 9 9   \n";
  EXPECT_EQ(parse_tabloid(text), example_p());
}

TEST(TextFormatTest, PartialFillingRoundTrip) {
  PartialFilling p = partial("3,2/1", {{-1, 4}, {0, -1}});
  std::string text = serialize_tableau(p);
  EXPECT_EQ(text, "shape: 3,2/1\n. - 4\n0 -\n");
  auto doc = parse_tableau(text);
  ASSERT_TRUE(std::holds_alternative<PartialFilling>(doc));
  EXPECT_EQ(std::get<PartialFilling>(doc), p);
  EXPECT_THROW(parse_tabloid(text), ParseError);
}

TEST(TextFormatTest, EmptyShape) {
  Tabloid empty(shape(""));
  EXPECT_EQ(serialize_tableau(empty), "shape:\n");
  EXPECT_EQ(parse_tabloid("shape:\n"), empty);
}

TEST(TextFormatTest, ErrorsCarryPosition) {
  try {
    parse_tabloid("shape: 2,1\n0 x\n1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    parse_tabloid("shape: 2,1\n0 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_tabloid("shap: 2\n0 0\n"), ParseError);
  EXPECT_THROW(parse_tabloid("shape: 2\n0 0 0\n"), ParseError);
  EXPECT_THROW(parse_tabloid("shape: 2/1\n0 0\n"), ParseError);
  EXPECT_THROW(parse_tabloid("shape: 2\n0 -3\n"), ParseError);
  EXPECT_THROW(parse_tabloid("shape: 2\n0 99999999999999999999\n"), ParseError);
  EXPECT_THROW(parse_tabloid("shape: 3,2/1\n. 0 0\n0 0 0\n"), ParseError);
  EXPECT_THROW(parse_tabloid(""), ParseError);
}

TEST(TextFormatTest, MultipleDocuments) {
  std::string text = serialize_tableau(example_r()) + "\n# multiplicities\n" + serialize_tableau(example_t());
  auto docs = parse_documents(text);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(std::get<Tabloid>(docs[0]), example_r());
  EXPECT_EQ(std::get<Tabloid>(docs[1]), example_t());
  EXPECT_THROW(parse_tableau(text), ParseError);
}

TEST(TextFormatTest, GoldenFiles) {
  EXPECT_EQ(parse_tabloid(read_file("example_p.yt")), example_p());
  EXPECT_EQ(parse_tabloid(read_file("example_q.yt")), example_q());
  EXPECT_EQ(parse_tabloid(read_file("example_r.yt")), example_r());
  EXPECT_EQ(parse_tabloid(read_file("example_t.yt")), example_t());
}

TEST(StructuredFormatTest, RoundTrip) {
  nlohmann::json j = to_json(example_p());
  EXPECT_EQ(j["kind"], "tabloid");
  EXPECT_EQ(j["lambda"], nlohmann::json({4, 4, 4, 3}));
  EXPECT_EQ(j["mu"], nlohmann::json({2, 2, 1}));
  EXPECT_EQ(j["rows"][2], nlohmann::json({1, 4, 9}));
  EXPECT_EQ(std::get<Tabloid>(tableau_from_json(j)), example_p());
  EXPECT_EQ(std::get<Tabloid>(parse_structured(j.dump())), example_p());

  PartialFilling p = partial("2,1", {{-1, 3}, {1}});
  nlohmann::json pj = to_json(p);
  EXPECT_EQ(pj["kind"], "partial");
  EXPECT_TRUE(pj["rows"][0][0].is_null());
  EXPECT_EQ(std::get<PartialFilling>(tableau_from_json(pj)), p);
}

TEST(StructuredFormatTest, Errors) {
  EXPECT_THROW(parse_structured("{"), ParseError);
  EXPECT_THROW(parse_structured(R"({"kind":"tabloid","lambda":[2],"mu":[],"rows":[[1]]})"),
               ParseError);
  EXPECT_THROW(parse_structured(R"({"kind":"tabloid","lambda":[1,2],"mu":[],"rows":[[0],[0,0]]})"),
               Error);
  EXPECT_THROW(parse_structured(R"({"kind":"other","lambda":[1],"mu":[],"rows":[[0]]})"),
               ParseError);
  EXPECT_THROW(parse_structured(R"({"kind":"tabloid","lambda":[1],"mu":[],"rows":[[-1]]})"),
               Error);
  EXPECT_THROW(parse_structured(R"({"kind":"tabloid","lambda":[1],"mu":[],"rows":[[null]]})"),
               ParseError);
  EXPECT_THROW(parse_structured(R"({"lambda":[1],"mu":[],"rows":[[0]]})"), ParseError);
}

TEST(CompactTest, Rendering) {
  EXPECT_EQ(compact(tab("3,2/1", {{0, 0}, {0, 5}})), ". 0 0 / 0 5");
  EXPECT_EQ(compact(partial("2,1", {{-1, 3}, {1}})), "- 3 / 1");
}

TEST(ReportTest, TraceTextGolden) {
  EXPECT_EQ(format_trace(split(example_q(), 6).trace), read_file("split_trace.txt"));
  EXPECT_EQ(format_trace(evacuate(example_p()).trace), read_file("evacuate_trace.txt"));
}

TEST(ReportTest, TraceJsonShape) {
  nlohmann::json j = trace_to_json(split(example_q(), 6).trace);
  EXPECT_EQ(j["algorithm"], "split");
  ASSERT_EQ(j["steps"].size(), 4u);
  EXPECT_EQ(j["steps"][1]["e"], 1);
  EXPECT_EQ(j["steps"][1]["selected"], nlohmann::json({1, 3}));
  EXPECT_EQ(j["steps"][1]["path"].size(), 4u);
}

TEST(ReportTest, IdentityJsonUsesStringsForHugeCoefficients) {
  IdentityReport rep = verify_identity(shape("1"), 1, 1);
  rep.ssyt = QSeries(1, {BigInt(1), BigInt("123456789012345678901234567890")});
  nlohmann::json j = identity_report_to_json(rep);
  EXPECT_EQ(j["coefficients"][1]["ssyt"], "123456789012345678901234567890");
  EXPECT_EQ(j["coefficients"][0]["ssyt"], 1);
}

TEST(IoPropertyTest, RandomTabloidsRoundTrip) {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    SkewShape s = random_shape(rng, 5, 6);
    Tabloid t = random_ssyt(rng, s, 20);
    EXPECT_EQ(parse_tabloid(serialize_tableau(t)), t);
    EXPECT_EQ(std::get<Tabloid>(tableau_from_json(to_json(t))), t);
  }
}

}  // namespace
}  // namespace skewjdt
