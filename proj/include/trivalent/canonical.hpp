#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/graph.hpp"

namespace trivalent {

/// Canonical text form of a trivalent graph: a balanced string over the
/// digits 0-3 where "0...1" wraps a vertex reached by a weight-1 edge (or the
/// root) and "2...3" wraps a vertex reached by a weight-2 edge. Two graphs
/// are isomorphic iff their canonical strings are equal.
class CanonicalString {
public:
  CanonicalString() = default;
  explicit CanonicalString(std::string text) : text_(std::move(text)) {}

  const std::string& str() const noexcept { return text_; }
  std::size_t size() const noexcept { return text_.size(); }

  friend auto operator<=>(const CanonicalString&, const CanonicalString&) = default;
  friend bool operator==(const CanonicalString&, const CanonicalString&) = default;

private:
  std::string text_;
};

/// Largest unweighted distance from `v` to any vertex.
std::size_t eccentricity(const TrivalentGraph& g, VertexId v);

/// A longest simple path starting at `v` (first element is `v`, last is a
/// leaf). Among equally long branches the lowest vertex id is followed.
std::vector<VertexId> farthest_path(const TrivalentGraph& g, VertexId v);

/// The unique vertex of minimum eccentricity, found as the middle of a
/// diameter located by two farthest_path sweeps.
VertexId center(const TrivalentGraph& g);

/// Tuple names of every vertex of a rooted graph, indexed by vertex id.
/// Throws std::invalid_argument if `g` has no root.
std::vector<std::string> tuple_names(const TrivalentGraph& g);

/// Tuple name of a single vertex of a rooted graph.
std::string ahu_modified(const TrivalentGraph& g, VertexId v);

CanonicalString encode(const TrivalentGraph& g);

enum class DecodeErrorKind {
  Empty,
  IllegalCharacter,
  Unbalanced,
  NotCanonical,
  InvalidGraph,
};

class DecodeError : public std::invalid_argument {
public:
  DecodeError(DecodeErrorKind kind, std::size_t position, const std::string& what)
      : std::invalid_argument(what), kind_(kind), position_(position) {}

  DecodeErrorKind kind() const noexcept { return kind_; }
  /// Offending character offset, or the string length when not positional.
  std::size_t position() const noexcept { return position_; }

private:
  DecodeErrorKind kind_;
  std::size_t position_;
};

/// Parses any balanced wrapper string into a rooted tree (root = vertex 0,
/// children numbered in reading order). Children need not be sorted and the
/// root need not be the center. Colors follow bipartite parity, with a black
/// root iff the tree height is odd. Only Empty, IllegalCharacter and
/// Unbalanced errors are raised; the result is not validated.
TrivalentGraph parse_rooted_string(std::string_view text);

/// Inverse of encode. Rejects text that is not exactly the canonical string
/// of the trivalent graph it describes. The returned graph is rooted at its
/// center, which is vertex 0.
TrivalentGraph decode(std::string_view text);
inline TrivalentGraph decode(const CanonicalString& s) { return decode(s.str()); }

/// Partition of the white vertices into orbits of the automorphism group of
/// the center-rooted graph. Blocks are sorted internally and ordered by their
/// smallest member.
struct SymmetryClasses {
  std::vector<std::vector<VertexId>> blocks;

  /// Smallest member of each block, ascending.
  std::vector<VertexId> representatives() const;
};

/// Symmetry classes of the white vertices with respect to the center root.
/// Any root already set on `g` is ignored.
SymmetryClasses symmetry_classes(const TrivalentGraph& g);

}  // namespace trivalent

template <>
struct std::hash<trivalent::CanonicalString> {
  std::size_t operator()(const trivalent::CanonicalString& s) const noexcept {
    return std::hash<std::string>{}(s.str());
  }
};
