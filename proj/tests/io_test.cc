#include <set>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mutanta/catalog_io.h"
#include "mutanta/json_io.h"

namespace mutanta {
namespace {

TEST(JsonIoTest, QuiverRoundTrip) {
  const Quiver q(3, {{1, 0}, {1, 2}});
  EXPECT_EQ(to_json(q).dump(), R"({"n":3,"arrows":[[1,0],[1,2]]})");
  EXPECT_EQ(parse_quiver(to_json(q).dump()), q);
  EXPECT_EQ(parse_quiver(R"({"arrows": [[1,2],[1,0]], "n": 3})"), q);
  EXPECT_EQ(parse_quiver(R"({"n":1,"arrows":[]})"), linear_quiver(1));
}

TEST(JsonIoTest, TriangulationRoundTrip) {
  const Triangulation t = fan_triangulation(6, 0);
  EXPECT_EQ(to_json(t).dump(), R"({"polygon_size":6,"diagonals":[[0,2],[0,3],[0,4]]})");
  EXPECT_EQ(parse_triangulation(to_json(t).dump()), t);
  // Endpoints in either order.
  EXPECT_EQ(parse_triangulation(R"({"polygon_size":5,"diagonals":[[3,0],[2,0]]})"),
            fan_triangulation(5, 0));
}

TEST(JsonIoTest, MalformedQuivers) {
  EXPECT_THROW(parse_quiver("not json"), std::invalid_argument);
  EXPECT_THROW(parse_quiver(R"({"arrows":[]})"), std::invalid_argument);
  EXPECT_THROW(parse_quiver(R"({"n":"3","arrows":[]})"), std::invalid_argument);
  EXPECT_THROW(parse_quiver(R"({"n":3,"arrows":[[0]]})"), std::invalid_argument);
  EXPECT_THROW(parse_quiver(R"({"n":3,"arrows":[[0,1.5]]})"), std::invalid_argument);
  EXPECT_THROW(parse_quiver(R"({"n":3,"arrows":[[0,3]]})"), std::invalid_argument);
  EXPECT_THROW(parse_quiver(R"({"n":2,"arrows":[[0,1],[1,0]]})"), std::invalid_argument);
  EXPECT_THROW(parse_quiver("[1,2]"), std::invalid_argument);
}

TEST(JsonIoTest, MalformedTriangulations) {
  EXPECT_THROW(parse_triangulation(R"({"polygon_size":5,"diagonals":[[0,2]]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_triangulation(R"({"polygon_size":5,"diagonals":[[0,2],[1,3]]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_triangulation(R"({"polygon_size":5,"diagonals":[[0,1],[0,3]]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_triangulation(R"({"polygon_size":3,"diagonals":[[0,2]]})"),
               std::invalid_argument);
  EXPECT_THROW(parse_triangulation(R"({"diagonals":[]})"), std::invalid_argument);
}

TEST(CatalogIoTest, Jsonl) {
  const std::string text = catalog_to_jsonl(enumerate_mutation_class(3));
  std::istringstream lines(text);
  std::string line;
  int count = 0;
  std::set<CanonicalQuiver> seen;
  while (std::getline(lines, line)) {
    const Quiver q = parse_quiver(line);
    EXPECT_EQ(q.size(), 3);
    EXPECT_TRUE(validate_type_a(q));
    seen.insert(canonical_form(q));
    ++count;
  }
  EXPECT_EQ(count, 4);
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_EQ(text.back(), '\n');
}

TEST(CatalogIoTest, Dot) {
  EXPECT_EQ(catalog_to_dot(enumerate_mutation_class(2)),
            "digraph A2_0 {\n  0;\n  1;\n  1 -> 0;\n}\n");
  const std::string dot = catalog_to_dot(enumerate_mutation_class(4));
  std::size_t graphs = 0;
  for (std::size_t pos = dot.find("digraph"); pos != std::string::npos;
       pos = dot.find("digraph", pos + 1)) {
    ++graphs;
  }
  EXPECT_EQ(graphs, 6u);
  EXPECT_NE(dot.find("digraph A4_5 {"), std::string::npos);
}

TEST(CatalogIoTest, ExportIsDeterministic) {
  const std::string once = catalog_to_jsonl(enumerate_mutation_class(6, {}, 1));
  EXPECT_EQ(catalog_to_jsonl(enumerate_mutation_class(6, {}, 4)), once);
  EXPECT_EQ(catalog_to_jsonl(enumerate_mutation_class(6, {}, 1)), once);
  EXPECT_EQ(catalog_to_dot(enumerate_mutation_class(6, {}, 1)),
            catalog_to_dot(enumerate_mutation_class(6, {}, 3)));
}

}  // namespace
}  // namespace mutanta
