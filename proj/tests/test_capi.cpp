// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <json.hpp>
#include <string>

#include "contact_census/contact_census.h"

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

struct Outcome {
  cc_status status;
  std::string text;
};

Outcome run(const char* op, const std::string& request) {
  cc_document* doc = nullptr;
  cc_status st = cc_run(op, request.c_str(), &doc);
  Outcome r{st, doc ? std::string(cc_document_text(doc), cc_document_size(doc)) : std::string()};
  cc_document_free(doc);
  return r;
}

json run_json(const char* op, const std::string& request) {
  Outcome r = run(op, request);
  EXPECT_EQ(r.status, CC_OK) << op << ": " << cc_last_error();
  return json::parse(r.text);
}

}  // namespace

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STRNE(cc_version(), "");
  EXPECT_STREQ(cc_status_name(CC_OK), "ok");
  EXPECT_STREQ(cc_status_name(CC_WINDOW_TOO_SMALL), "window too small");
}

TEST(CApi, Slopes) {
  cc_slope s;
  ASSERT_EQ(cc_slope_parse("-10/3", &s), CC_OK);
  EXPECT_EQ(s.p, -10);
  EXPECT_EQ(s.q, 3);
  ASSERT_EQ(cc_slope_parse("inf", &s), CC_OK);
  EXPECT_EQ(s.p, 1);
  EXPECT_EQ(s.q, 0);
  EXPECT_EQ(cc_slope_parse("4/0x", &s), CC_PARSE);
  EXPECT_NE(std::string(cc_last_error()), "");
  EXPECT_EQ(cc_slope_parse(nullptr, &s), CC_INVALID_ARGUMENT);

  int adj = -1;
  ASSERT_EQ(cc_farey_adjacent({0, 1}, {1, 0}, &adj), CC_OK);
  EXPECT_EQ(adj, 1);
  cc_slope out;
  ASSERT_EQ(cc_bypass_slope({-10, 3}, {0, 1}, CC_CLOCKWISE, &out), CC_OK);
  EXPECT_EQ(out.p, -3);
  EXPECT_EQ(out.q, 1);
  ASSERT_EQ(cc_bypass_slope({-10, 3}, {0, 1}, CC_COUNTERCLOCKWISE, &out), CC_OK);
  EXPECT_EQ(out.p, -7);
  EXPECT_EQ(out.q, 2);
  EXPECT_EQ(cc_bypass_slope({1, 2}, {1, 2}, CC_CLOCKWISE, &out), CC_INVALID_ARGUMENT);
}

TEST(CApi, Counts) {
  int64_t n = 0;
  ASSERT_EQ(cc_count_lens(10, 3, &n), CC_OK);
  EXPECT_EQ(n, 3);
  ASSERT_EQ(cc_count_minimal(10, 3, &n), CC_OK);
  EXPECT_EQ(n, 6);
  ASSERT_EQ(cc_count_solid_torus(10, 3, &n), CC_OK);
  EXPECT_EQ(n, 6);
  int modulo = -1;
  ASSERT_EQ(cc_count_t2i(1, 1, 0, &n, &modulo), CC_OK);
  EXPECT_EQ(n, 1);
  EXPECT_EQ(modulo, 1);
  ASSERT_EQ(cc_count_t2i(10, 3, 2, &n, &modulo), CC_OK);
  EXPECT_EQ(n, 2);
  EXPECT_EQ(modulo, 0);
  ASSERT_EQ(cc_count_nonrotative(1, 2, &n), CC_OK);
  EXPECT_EQ(n, 2);
  int64_t pd = 0, qd = 0;
  ASSERT_EQ(cc_dual_slope(10, 3, &pd, &qd), CC_OK);
  EXPECT_EQ(pd, 3);
  EXPECT_EQ(qd, 1);
  EXPECT_EQ(cc_count_lens(4, 2, &n), CC_DOMAIN);
  EXPECT_EQ(cc_count_lens(10, 3, nullptr), CC_INVALID_ARGUMENT);
  EXPECT_EQ(cc_count_minimal(INT64_MAX, INT64_MAX - 1, &n), CC_OVERFLOW);
}

TEST(CApi, RunOperations) {
  ordered head = ordered::parse(run("cf", R"({"p":10,"q":3})").text);
  EXPECT_EQ(head.begin().key(), "schema");
  json cf = run_json("cf", R"({"p":10,"q":3})");
  EXPECT_EQ(cf["coeffs"], json({-4, -2, -2}));
  EXPECT_EQ(run_json("farey.path", R"({"from":"-10/3","to":"-1"})")["path"], json({"-10/3", "-3", "-2", "-1"}));
  EXPECT_EQ(run_json("lens.count", R"({"p":10,"q":3})")["count"], 3);
  EXPECT_EQ(run_json("t2i.enumerate", R"({"p":10,"q":3})")["descriptors"].size(), 6u);
  EXPECT_EQ(run_json("t2i.glue-check", R"({"chain":["-2","-3/2","-1"],"signs":[1,-1]})")["result"], "overtwisted");
  EXPECT_EQ(run_json("divsets.disk", R"({"t":4})")["count"], 14);
  EXPECT_EQ(run_json("t2i.twisting", R"({"chain":["-1","0","1","inf","-1"]})")["half_turns"], 1);
  Outcome svg = run("diagram", R"({"kind":"farey","payload":{"depth":2}})");
  ASSERT_EQ(svg.status, CC_OK);
  EXPECT_EQ(svg.text.rfind("<svg", 0), 0u);
}

TEST(CApi, RunErrors) {
  cc_document* doc = reinterpret_cast<cc_document*>(0x1);
  EXPECT_EQ(cc_run("nope", "{}", &doc), CC_INVALID_ARGUMENT);
  EXPECT_EQ(doc, nullptr);
  EXPECT_EQ(run("cf", "{").status, CC_PARSE);
  EXPECT_EQ(run("cf", R"({"p":1,"q":1})").status, CC_DOMAIN);
  EXPECT_EQ(std::string(cc_last_error()), "slope -1 has no negative continued fraction");
  EXPECT_EQ(run("divsets.dual", R"({"config":{"inner":2,"outer":4,"arcs":[[["inner",0],["outer",0],0],[["inner",1],["outer",1],0],[["outer",2],["outer",3],0]]},"window":0})").status,
            CC_WINDOW_TOO_SMALL);
  EXPECT_EQ(run("diagram", R"({"kind":"torus"})").status, CC_INVALID_ARGUMENT);
}

TEST(CApi, ConfigHandles) {
  const char* lower_json =
      R"({"inner":2,"outer":4,"arcs":[[["inner",0],["outer",0],0],[["inner",1],["outer",1],0],[["outer",2],["outer",3],0]]})";
  const char* upper_json =
      R"({"inner":4,"outer":2,"arcs":[[["inner",0],["outer",0],0],[["inner",1],["outer",1],0],[["inner",2],["inner",3],0]]})";
  cc_config* lower = nullptr;
  cc_config* upper = nullptr;
  ASSERT_EQ(cc_config_from_json(lower_json, &lower), CC_OK);
  ASSERT_EQ(cc_config_from_json(upper_json, &upper), CC_OK);
  int crossing = 0;
  ASSERT_EQ(cc_config_crossing_count(lower, &crossing), CC_OK);
  EXPECT_EQ(crossing, 2);

  cc_config* glued = nullptr;
  int trivial = -1, essential = -1, identity = -1;
  ASSERT_EQ(cc_config_glue(lower, upper, &glued, &trivial, &essential, &identity), CC_OK);
  EXPECT_EQ(trivial, 1);
  EXPECT_EQ(essential, 0);
  EXPECT_EQ(identity, 0);
  cc_config_free(glued);
  glued = nullptr;

  cc_document* doc = nullptr;
  ASSERT_EQ(cc_config_to_json(lower, &doc), CC_OK);
  json round = json::parse(cc_document_text(doc));
  cc_document_free(doc);
  EXPECT_EQ(round["outer"], 4);
  EXPECT_EQ(round["arcs"].size(), 3u);

  int reflexive = 0;
  ASSERT_EQ(cc_config_reflexive(lower, 6, &reflexive), CC_OK);
  EXPECT_EQ(reflexive, 1);
  int equiv = 0;
  ASSERT_EQ(cc_config_disk_equivalent(lower, lower, &equiv), CC_OK);
  EXPECT_EQ(equiv, 1);
  EXPECT_EQ(cc_config_glue(lower, lower, &glued, nullptr, nullptr, nullptr), CC_INVALID_ARGUMENT);

  cc_config* bad = nullptr;
  EXPECT_EQ(cc_config_from_json(R"({"inner":2,"outer":2,"arcs":[]})", &bad), CC_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_EQ(glued, nullptr);
  cc_config_free(lower);
  cc_config_free(upper);
  cc_config_free(nullptr);
}
