#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace trivalent {

using VertexId = std::uint32_t;

enum class Color : std::uint8_t { White, Black };

/// Edge label of a trivalent graph. Only the values 1 and 2 exist.
class EdgeWeight {
public:
  static const EdgeWeight One;
  static const EdgeWeight Two;

  /// Throws std::invalid_argument for anything other than 1 or 2.
  static EdgeWeight from_int(int value);

  constexpr int value() const noexcept { return value_; }

  friend constexpr bool operator==(EdgeWeight, EdgeWeight) = default;

private:
  constexpr explicit EdgeWeight(int value) : value_(value) {}
  int value_;
};

inline constexpr EdgeWeight EdgeWeight::One{1};
inline constexpr EdgeWeight EdgeWeight::Two{2};

struct Neighbor {
  VertexId vertex;
  EdgeWeight weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct Edge {
  VertexId u;
  VertexId v;
  EdgeWeight weight;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Census {
  std::size_t whites = 0;
  std::size_t blacks = 0;
  std::size_t leaves = 0;

  friend bool operator==(const Census&, const Census&) = default;
};

/// A bicolored tree with edge labels in {1, 2}, optionally rooted.
///
/// Vertex ids are always the dense range [0, size()). Adjacency lists keep
/// insertion order. A graph is immutable once built; operations that change
/// structure return a new graph. Structural well-formedness (ids in range,
/// no self loops) is enforced at construction, while the trivalent-graph
/// invariants (tree, bipartite, white leaves, ...) are reported by validate().
class TrivalentGraph {
public:
  TrivalentGraph() = default;

  /// Builds a graph from per-vertex colors and an undirected edge list.
  /// Throws std::invalid_argument on out-of-range ids or self loops.
  TrivalentGraph(std::vector<Color> colors, std::span<const Edge> edges);

  /// Builds a graph from raw adjacency lists without symmetrizing them, so
  /// hand-made inconsistent inputs can be fed to validate().
  static TrivalentGraph from_adjacency(std::vector<Color> colors,
                                       std::vector<std::vector<Neighbor>> adjacency);

  std::size_t size() const noexcept { return colors_.size(); }
  bool contains(VertexId v) const noexcept { return v < colors_.size(); }

  Color color(VertexId v) const { return colors_.at(v); }
  bool is_white(VertexId v) const { return color(v) == Color::White; }
  bool is_black(VertexId v) const { return color(v) == Color::Black; }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool is_leaf(VertexId v) const { return degree(v) == 1; }

  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }
  const std::vector<Color>& colors() const noexcept { return colors_; }

  /// Weight of the edge {u, v}, or nullopt if they are not adjacent.
  std::optional<EdgeWeight> weight(VertexId u, VertexId v) const;

  /// Each undirected edge once, with u < v, ordered by (u, v).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  std::vector<VertexId> white_vertices() const;
  std::vector<VertexId> leaves() const;

  std::optional<VertexId> root() const noexcept { return root_; }
  /// Copy of this graph with `v` marked as root.
  TrivalentGraph rooted_at(VertexId v) const;

  /// Structural equality: same colors, same adjacency lists in the same order, same root.
  friend bool operator==(const TrivalentGraph&, const TrivalentGraph&) = default;

private:
  std::vector<Color> colors_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::optional<VertexId> root_;
};

enum class ViolationKind {
  AsymmetricAdjacency,
  NotATree,
  BipartiteViolation,
  BlackLeaf,
  WeightPatternViolation,
  NoWeightOneLeaf,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> vertices;
  std::string detail;
};

/// Every violated trivalent-graph invariant, one entry per invariant kind.
/// Empty iff `g` is a valid trivalent graph.
std::vector<Violation> validate(const TrivalentGraph& g);

inline bool is_valid(const TrivalentGraph& g) { return validate(g).empty(); }

Census census(const TrivalentGraph& g);

/// One black vertex joined to two white leaves by edges of weight 1 and 2.
/// Vertex 0 is black, vertex 1 is the weight-1 leaf, vertex 2 the weight-2 leaf.
TrivalentGraph b12();

/// One black vertex (id 0) joined to three white leaves by weight-1 edges.
TrivalentGraph b111();

/// Relabels vertices: vertex v of `g` becomes `perm[v]`. The root, if any,
/// follows its vertex. Throws std::invalid_argument if `perm` is not a
/// bijection on [0, g.size()).
TrivalentGraph relabel(const TrivalentGraph& g, std::span<const VertexId> perm);

class OracleSizeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOracleVertexLimit = 16;

/// Exhaustive search for a color- and weight-preserving isomorphism. Meant
/// as a test oracle: throws OracleSizeError if either graph has more than
/// `vertex_limit` vertices.
bool is_isomorphic_bruteforce(const TrivalentGraph& g, const TrivalentGraph& h,
                              std::size_t vertex_limit = kDefaultOracleVertexLimit);

/// The graph induced on `keep` (in the given order: keep[i] becomes vertex i).
/// Edges leaving the set are dropped. The root is not carried over.
TrivalentGraph induced_subgraph(const TrivalentGraph& g, std::span<const VertexId> keep);

}  // namespace trivalent
