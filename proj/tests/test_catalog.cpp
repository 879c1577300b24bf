#include <doctest.h>

#include <regex>
#include <sstream>

#include "oracles.hpp"
#include "trivalent/catalog.hpp"

using namespace trivalent;
using namespace trivalent::testing;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t rejected_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_catalog(in);
  } catch (const CatalogError& e) {
    return e.line();
  }
  FAIL("catalog accepted");
  return 0;
}

// Tag fields recomputed from all-pairs distances.
Tag oracle_tag(const TrivalentGraph& g, std::size_t id) {
  const auto dist = all_pairs_distances(g);
  const auto leaves = g.leaves();
  const Census c = census(g);
  Tag t{c.whites, c.blacks, c.leaves, SIZE_MAX, 0, id};
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      t.shortest_leaf_path = std::min(t.shortest_leaf_path, dist[leaves[i]][leaves[j]]);
      t.largest_leaf_path = std::max(t.largest_leaf_path, dist[leaves[i]][leaves[j]]);
    }
  }
  return t;
}

}  // namespace

TEST_CASE("tags") {
  CHECK(make_tag(b12(), 0) == Tag{2, 1, 2, 2, 2, 0});
  CHECK(make_tag(b111(), 4) == Tag{3, 1, 3, 2, 2, 4});
  CHECK(make_tag(apply_o2(b12(), 1), 1) == Tag{3, 2, 2, 4, 4, 1});
  CHECK(to_string(make_tag(b12(), 0)) == "[2,1,2,2,2,0]");
  CHECK_THROWS_AS(make_tag(make_graph({W}, {}), 0), std::logic_error);

  const auto r = enumerate(7, EnumerationMode::Naive);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& rec : r.store.group(n)) {
      CHECK(make_tag(rec.graph, rec.ordinal) == oracle_tag(rec.graph, rec.ordinal));
    }
  }
}

TEST_CASE("DOT export") {
  const std::regex header(R"(graph [A-Za-z_][A-Za-z0-9_]* \{)");
  const std::regex node(R"(  \d+( \[style=filled, fillcolor=black\])?;)");
  const std::regex edge(R"(  \d+ -- \d+( \[label="2"\])?;)");

  const auto r = enumerate(6, EnumerationMode::Naive);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& rec : r.store.group(n)) {
      const auto lines = lines_of(to_dot(rec.graph, "G_n" + std::to_string(n)));
      REQUIRE(lines.size() >= 3);
      CHECK(std::regex_match(lines.front(), header));
      CHECK(lines.back() == "}");
      std::size_t nodes = 0, filled = 0, edges = 0, labeled = 0;
      for (std::size_t i = 2; i + 1 < lines.size(); ++i) {
        if (std::regex_match(lines[i], edge)) {
          ++edges;
          labeled += lines[i].find("label=\"2\"") != std::string::npos;
        } else if (std::regex_match(lines[i], node)) {
          ++nodes;
          filled += lines[i].find("filled") != std::string::npos;
        } else {
          FAIL("unexpected DOT line: " << lines[i]);
        }
      }
      std::size_t weight_two = 0;
      for (const Edge& e : rec.graph.edges()) weight_two += e.weight == EdgeWeight::Two;
      const Census c = census(rec.graph);
      CHECK(nodes == rec.graph.size());
      CHECK(filled == c.blacks);
      CHECK(edges == rec.graph.size() - 1);
      CHECK(labeled == weight_two);
    }
  }
}

TEST_CASE("catalog records") {
  const auto r = enumerate(4, EnumerationMode::Naive);
  std::ostringstream out;
  write_catalog(r, out);
  const auto lines = lines_of(out.str());
  CHECK(lines.size() == 10);
  CHECK(lines.front() == R"({"n":2,"id":0,"canon":"001231","tag":[2,1,2,2,2,0]})");

  SUBCASE("round trip") {
    std::istringstream in(out.str());
    const auto back = read_catalog(in);
    CHECK(back.store == r.store);
    CHECK(back.distinct_counts == r.distinct_counts);
    CHECK(back.created_counts == r.created_counts);
    std::ostringstream again;
    write_catalog(back, again);
    CHECK(again.str() == out.str());
  }
  SUBCASE("symmetry-mode created counts are rebuilt") {
    std::istringstream in(out.str());
    const auto back = read_catalog(in, EnumerationMode::SymmetryReduced);
    CHECK(back.created_counts == enumerate(4, EnumerationMode::SymmetryReduced).created_counts);
  }
  SUBCASE("blank lines are skipped") {
    std::istringstream in("\n" + out.str() + "\n");
    CHECK(read_catalog(in).store == r.store);
  }
}

TEST_CASE("bad catalog records name their line") {
  const std::string good = R"({"n":2,"id":0,"canon":"001231","tag":[2,1,2,2,2,0]})"
                           "\n";
  CHECK(rejected_line(good + "{not json\n") == 2);
  CHECK(rejected_line(good + R"({"n":3,"id":0,"canon":"00101011"})" "\n") == 2);
  CHECK(rejected_line(R"({"n":2,"id":0,"canon":"023011","tag":[2,1,2,2,2,0]})" "\n") == 1);
  CHECK(rejected_line(good + good) == 2);
  CHECK(rejected_line(R"({"n":3,"id":0,"canon":"001231","tag":[2,1,2,2,2,0]})" "\n") == 1);
  CHECK(rejected_line(R"({"n":2,"id":1,"canon":"001231","tag":[2,1,2,2,2,1]})" "\n") == 1);
  CHECK(rejected_line(R"({"n":2,"id":0,"canon":"001231","tag":[2,1,2,2,3,0]})" "\n") == 1);
  CHECK(rejected_line(R"({"n":2,"id":0,"canon":"001231","tag":[2,1,2]})" "\n") == 1);
}

TEST_CASE("stats table") {
  SUBCASE("naive") {
    const auto lines = lines_of(stats_table(enumerate(5, EnumerationMode::Naive)));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "n,total,created,reduction_percent");
    CHECK(lines[1] == "2,1,1,");
    CHECK(lines[4] == "5,18,37,");
  }
  SUBCASE("symmetry") {
    const auto naive = enumerate(8, EnumerationMode::Naive);
    const auto reduced = enumerate(8, EnumerationMode::SymmetryReduced);
    const auto predicted = lines_of(stats_table(reduced));
    const auto measured = lines_of(stats_table(reduced, &naive.created_counts));
    CHECK(predicted == measured);
    REQUIRE(measured.size() == 8);
    CHECK(measured[3] == "4,6,11,0.00");
    CHECK(measured[4] == "5,18,32,13.51");
    CHECK(measured[6] == "7,167,467,18.50");
    CHECK(measured[7] == "8,551,1781,21.44");
  }
}
