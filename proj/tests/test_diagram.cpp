#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "contact_census/diagram.hpp"
#include "contact_census/error.hpp"
#include "contact_census/serialize.hpp"

using namespace contact_census;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in.good()) << "missing golden file " << name;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST(Golden, FareyDepthFour) {
  EXPECT_EQ(emit_diagram("farey", R"({"depth":4})", DiagramFormat::Svg), read_golden("farey_depth4.svg"));
}

TEST(Golden, DiskTwoBothConfigurations) {
  auto disks = enumerate_disk(2);
  ASSERT_EQ(disks.size(), 2u);
  std::string nested = disk_svg(DiskConfig{2, {{0, 3}, {1, 2}}});
  std::string parallel = disk_svg(DiskConfig{2, {{0, 1}, {2, 3}}});
  EXPECT_EQ(nested, read_golden("disk_t2_nested.svg"));
  EXPECT_EQ(parallel, read_golden("disk_t2_parallel.svg"));
  EXPECT_NE(nested, parallel);
  std::set<std::string> from_enum;
  for (const auto& d : disks) from_enum.insert(emit_diagram("chord", to_json(d).dump(), DiagramFormat::Svg));
  EXPECT_EQ(from_enum, (std::set<std::string>{nested, parallel}));
}

TEST(Golden, EmptyPayload) {
  EXPECT_EQ(emit_diagram("chord", "", DiagramFormat::Svg), read_golden("empty.svg"));
  EXPECT_EQ(emit_diagram("farey", "{}", DiagramFormat::Svg), empty_svg());
  EXPECT_EQ(emit_diagram("chord", "null", DiagramFormat::Svg), empty_svg());
  EXPECT_EQ(empty_svg().rfind("<svg", 0), 0u);
}

TEST(Diagram, Deterministic) {
  for (int d = 0; d <= 6; ++d) {
    EXPECT_EQ(farey_svg(d), farey_svg(d));
    EXPECT_EQ(farey_dot(d), farey_dot(d));
  }
  AnnulusConfig c = config_from_words("XX()", "X(())X", 0);
  EXPECT_EQ(annulus_svg(c), annulus_svg(c));
  EXPECT_EQ(annulus_svg(c), emit_diagram("chord", to_json(c).dump(), DiagramFormat::Svg));
  EXPECT_EQ(annulus_dot(c), emit_diagram("chord", to_json(c).dump(), DiagramFormat::Dot));
}

TEST(Diagram, FareyVerticesAndEdges) {
  for (int d = 0; d < 8; ++d) {
    auto v = farey_vertices(d);
    auto next = farey_vertices(d + 1);
    EXPECT_EQ(next.size(), 2 * v.size());
    std::set<Slope> bigger(next.begin(), next.end());
    for (const Slope& s : v) EXPECT_TRUE(bigger.count(s));
    for (auto [a, b] : farey_edges(d)) EXPECT_TRUE(farey_adjacent(a, b));
    // The tessellation of a polygon with V vertices has 2V - 3 edges.
    EXPECT_EQ(farey_edges(d).size(), 2 * v.size() - 3);
  }
  EXPECT_THROW(farey_vertices(11), Error);
  EXPECT_THROW(farey_vertices(-1), Error);
}

TEST(Diagram, DotOutput) {
  std::string dot = disk_dot(DiskConfig{2, {{0, 1}, {2, 3}}});
  EXPECT_EQ(dot.rfind("graph", 0), 0u);
  EXPECT_NE(dot.find("--"), std::string::npos);
  EXPECT_EQ(emit_diagram("chord", "{}", DiagramFormat::Dot), "graph empty {\n}\n");
  EXPECT_NE(farey_dot(2).find("\"1/2\""), std::string::npos);
}

TEST(Diagram, Errors) {
  EXPECT_THROW(emit_diagram("torus", "{}", DiagramFormat::Svg), Error);
  EXPECT_THROW(emit_diagram("chord", "{\"t\":2,\"arcs\":[[0,2],[1,3]]}", DiagramFormat::Svg), Error);
  EXPECT_THROW(emit_diagram("farey", "{\"depth\":", DiagramFormat::Svg), Error);
}
