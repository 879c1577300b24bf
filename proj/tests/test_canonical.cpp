#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trivalent/canonical.hpp"
#include "trivalent/generator.hpp"
#include "trivalent/verify.hpp"

using namespace trivalent;
using namespace trivalent::testing;

namespace {

const EnumerationResult& small_catalog() {
  static const EnumerationResult result = enumerate(7, EnumerationMode::Naive);
  return result;
}

template <typename F>
void for_each_graph(std::size_t max_white, F&& f) {
  for (std::size_t n = 2; n <= max_white; ++n) {
    for (const auto& rec : small_catalog().store.group(n)) f(rec);
  }
}

DecodeErrorKind decode_error_kind(std::string_view s) {
  try {
    decode(s);
  } catch (const DecodeError& e) {
    return e.kind();
  }
  FAIL("decode accepted " << s);
  return DecodeErrorKind::Empty;
}

}  // namespace

TEST_CASE("farthest_path") {
  SUBCASE("b12 from the black vertex reaches a leaf in one step") {
    const auto p = farthest_path(b12(), 0);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == 0);
    CHECK(b12().is_leaf(p[1]));
  }
  SUBCASE("b12 from the weight-1 leaf ends at the other leaf") {
    CHECK(farthest_path(b12(), 1) == std::vector<VertexId>{1, 0, 2});
  }
  SUBCASE("b111 from a leaf has two edges and ends at another leaf") {
    const auto p = farthest_path(b111(), 2);
    REQUIRE(p.size() == 3);
    CHECK(p.back() != 2);
    CHECK(b111().is_leaf(p.back()));
  }
  SUBCASE("is always one of the exhaustively found longest paths") {
    for_each_graph(5, [](const GraphRecord& rec) {
      for (VertexId v = 0; v < rec.graph.size(); ++v) {
        const auto p = farthest_path(rec.graph, v);
        const auto longest = all_longest_paths_from(rec.graph, v);
        CHECK(std::find(longest.begin(), longest.end(), p) != longest.end());
        CHECK(rec.graph.is_leaf(p.back()));
      }
    });
  }
  CHECK_THROWS_AS(farthest_path(b12(), 9), std::out_of_range);
}

TEST_CASE("eccentricity") {
  CHECK(eccentricity(b12(), 0) == 1);
  CHECK(eccentricity(b111(), 1) == 2);
  CHECK_THROWS_AS(eccentricity(b12(), 3), std::out_of_range);

  for_each_graph(6, [](const GraphRecord& rec) {
    const auto expected = brute_eccentricities(rec.graph);
    for (VertexId v = 0; v < rec.graph.size(); ++v) {
      CHECK(eccentricity(rec.graph, v) == expected[v]);
      CHECK((expected[v] % 2 == 0) == rec.graph.is_white(v));
    }
  });
}

TEST_CASE("center") {
  CHECK(center(b12()) == 0);
  CHECK(center(b111()) == 0);

  SUBCASE("matches the unique brute-force argmin") {
    for_each_graph(7, [](const GraphRecord& rec) {
      const auto central = brute_central_vertices(rec.graph);
      REQUIRE(central.size() == 1);
      CHECK(center(rec.graph) == central.front());
    });
  }
  SUBCASE("follows relabeling") {
    std::mt19937_64 rng(3);
    for_each_graph(6, [&](const GraphRecord& rec) {
      const auto perm = random_permutation(rec.graph.size(), rng);
      CHECK(center(relabel(rec.graph, perm)) == perm[center(rec.graph)]);
    });
  }
}

TEST_CASE("ahu_modified tuple names") {
  const auto g = b12().rooted_at(0);
  CHECK(ahu_modified(g, 1) == "01");
  CHECK(ahu_modified(g, 2) == "23");
  CHECK(ahu_modified(g, 0) == "001231");
  CHECK_THROWS_AS(ahu_modified(b12(), 0), std::invalid_argument);

  SUBCASE("a root without father uses the weight-1 wrapper even when it is a leaf") {
    CHECK(ahu_modified(b12().rooted_at(2), 2) == "020131");
  }
}

TEST_CASE("encode") {
  CHECK(encode(b12()).str() == "001231");
  CHECK(encode(b111()).str() == "00101011");
  CHECK(encode(apply_o2(b12(), 1)).str() == "0023120131");

  SUBCASE("string invariants") {
    for_each_graph(7, [](const GraphRecord& rec) {
      const std::string& s = rec.canon.str();
      CHECK(s.size() == 2 * rec.graph.size());
      CHECK(s.front() == '0');
      CHECK(s.back() == '1');
      CHECK(s.find_first_not_of("0123") == std::string::npos);
      CHECK(children_sorted(s));
      CHECK(has_sorted_children(s));
    });
  }
  SUBCASE("label invariance") {
    std::mt19937_64 rng(5);
    for_each_graph(7, [&](const GraphRecord& rec) {
      for (int trial = 0; trial < 3; ++trial) {
        CHECK(encode(relabel(rec.graph, random_permutation(rec.graph.size(), rng))) == rec.canon);
      }
    });
  }
  SUBCASE("string equality agrees with the oracle up to five whites") {
    std::vector<const GraphRecord*> graphs;
    for_each_graph(5, [&](const GraphRecord& rec) { graphs.push_back(&rec); });
    std::mt19937_64 rng(9);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      // A relabeled copy must be recognized as the same graph.
      const auto copy = relabel(graphs[i]->graph, random_permutation(graphs[i]->graph.size(), rng));
      CHECK(is_isomorphic_bruteforce(copy, graphs[i]->graph));
      CHECK(encode(copy) == graphs[i]->canon);
      for (std::size_t j = i + 1; j < graphs.size(); ++j) {
        CHECK_FALSE(is_isomorphic_bruteforce(graphs[i]->graph, graphs[j]->graph));
        CHECK(graphs[i]->canon != graphs[j]->canon);
      }
    }
  }
}

TEST_CASE("has_sorted_children detects unsorted wrappers") {
  CHECK(has_sorted_children("001231"));
  CHECK_FALSE(has_sorted_children("023011"));
  for (const char* s : {"00101011", "0023120131", "0201310231", "00230111", "0023011231"}) {
    CHECK(has_sorted_children(s) == children_sorted(s));
  }
}

TEST_CASE("decode") {
  SUBCASE("inverts the seed encodings") {
    CHECK(is_isomorphic_bruteforce(decode("001231"), b12()));
    CHECK(is_isomorphic_bruteforce(decode("00101011"), b111()));
    CHECK(decode("001231").root() == VertexId{0});
  }
  SUBCASE("round trip on every generated graph") {
    std::mt19937_64 rng(13);
    for_each_graph(7, [&](const GraphRecord& rec) {
      const auto g = relabel(rec.graph, random_permutation(rec.graph.size(), rng));
      const auto back = decode(encode(g));
      CHECK(encode(back) == rec.canon);
      if (g.size() <= kDefaultOracleVertexLimit) CHECK(is_isomorphic_bruteforce(back, g));
    });
  }
  SUBCASE("colors come from height parity") {
    // Root of b12 is black (height 1); the O2 chain's root is white (height 2).
    CHECK(decode("001231").is_black(0));
    CHECK(decode("0023120131").is_white(0));
  }
  SUBCASE("error kinds") {
    CHECK(decode_error_kind("") == DecodeErrorKind::Empty);
    CHECK(decode_error_kind("0012x1") == DecodeErrorKind::IllegalCharacter);
    CHECK(decode_error_kind("00123") == DecodeErrorKind::Unbalanced);
    CHECK(decode_error_kind("001233") == DecodeErrorKind::Unbalanced);
    CHECK(decode_error_kind("023011") == DecodeErrorKind::NotCanonical);       // unsorted children
    CHECK(decode_error_kind("201233") == DecodeErrorKind::NotCanonical);       // 2...3 root wrapper
    CHECK(decode_error_kind("00123101") == DecodeErrorKind::Unbalanced);
    CHECK(decode_error_kind("01") == DecodeErrorKind::InvalidGraph);           // lone vertex
    CHECK(decode_error_kind("023231") == DecodeErrorKind::InvalidGraph);       // weights {2,2}
    CHECK(decode_error_kind("002311") == DecodeErrorKind::NotCanonical);       // rooted off-center
  }
  SUBCASE("error positions") {
    try {
      decode("0012x1");
      FAIL("expected error");
    } catch (const DecodeError& e) {
      CHECK(e.position() == 4);
    }
  }
}

TEST_CASE("parse_rooted_string accepts any rooting and child order") {
  const auto g = parse_rooted_string("023011");
  CHECK(validate(g).empty());
  CHECK(encode(g).str() == "001231");
}

TEST_CASE("symmetry classes") {
  SUBCASE("b111 has one class") {
    const auto classes = symmetry_classes(b111());
    CHECK(classes.blocks == std::vector<std::vector<VertexId>>{{1, 2, 3}});
    CHECK(classes.representatives() == std::vector<VertexId>{1});
  }
  SUBCASE("b12 has two singletons") {
    CHECK(symmetry_classes(b12()).blocks == std::vector<std::vector<VertexId>>{{1}, {2}});
  }
  SUBCASE("equal tuple names under non-symmetric fathers stay apart") {
    // Center c=0 (white). Branch 1: c -1- b1 with leaves 2,3 (weight 1).
    // Branch 2: c -2- b4 -1- leaf 5. Leaves 2, 3 and 5 are all named "01".
    const auto g = make_graph({W, B, W, W, B, W},
                              {{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {0, 4, 2}, {4, 5, 1}});
    REQUIRE(validate(g).empty());
    REQUIRE(center(g) == 0);
    const auto names = tuple_names(g.rooted_at(0));
    REQUIRE(names[2] == names[5]);
    CHECK(symmetry_classes(g).blocks == std::vector<std::vector<VertexId>>{{0}, {2, 3}, {5}});
  }
  SUBCASE("matches brute-force automorphism orbits") {
    for_each_graph(6, [](const GraphRecord& rec) {
      std::set<std::set<VertexId>> got;
      for (const auto& block : symmetry_classes(rec.graph).blocks) got.emplace(block.begin(), block.end());
      CHECK(got == brute_white_orbits(rec.graph, center(rec.graph)));
    });
  }
  SUBCASE("blocks partition the white vertices and refine tuple names") {
    for_each_graph(7, [](const GraphRecord& rec) {
      const auto classes = symmetry_classes(rec.graph);
      const auto names = tuple_names(rec.graph.rooted_at(center(rec.graph)));
      std::vector<VertexId> seen;
      for (const auto& block : classes.blocks) {
        for (VertexId v : block) {
          CHECK(rec.graph.is_white(v));
          CHECK(names[v] == names[block.front()]);
          seen.push_back(v);
        }
      }
      std::sort(seen.begin(), seen.end());
      CHECK(seen == rec.graph.white_vertices());
    });
  }
  SUBCASE("operations at symmetric vertices give the same graph") {
    for_each_graph(6, [](const GraphRecord& rec) {
      for (const auto& block : symmetry_classes(rec.graph).blocks) {
        const auto o2 = encode(apply_o2(rec.graph, block.front()));
        const auto o1 = encode(apply_o1(rec.graph, block.front()));
        for (VertexId v : block) {
          CHECK(encode(apply_o2(rec.graph, v)) == o2);
          CHECK(encode(apply_o1(rec.graph, v)) == o1);
        }
      }
    });
  }
}
