#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "trivalent/canonical.hpp"
#include "trivalent/graph.hpp"

namespace trivalent {

/// Attaches a fresh B12-tree at white vertex `w`: `w` takes the place of the
/// B12 white on the weight-2 edge, the weight-1 white becomes a new leaf.
/// New vertices are appended (black first, then the leaf).
TrivalentGraph apply_o2(const TrivalentGraph& g, VertexId w);

/// Attaches a fresh B111-tree at white vertex `w`; the other two B111 whites
/// become new leaves. Edges already incident to `w` stay where they are.
TrivalentGraph apply_o1(const TrivalentGraph& g, VertexId w);

/// Joins two graphs through a fresh B111-tree identified with `w1` and `w2`;
/// its third white becomes a new leaf. `g2`'s vertices are shifted by
/// g1.size(), then the black vertex and the leaf are appended.
TrivalentGraph apply_o1_star(const TrivalentGraph& g1, VertexId w1, const TrivalentGraph& g2,
                             VertexId w2);

enum class Operation { O1, O2, O1Star };

std::string to_string(Operation op);

enum class EnumerationMode { Naive, SymmetryReduced };

std::string to_string(EnumerationMode mode);
/// Accepts "naive" and "symmetry" (or "symmetryReduced").
EnumerationMode parse_mode(const std::string& text);

struct GraphRecord {
  CanonicalString canon;
  /// decode(canon): rooted at its center, which is vertex 0.
  TrivalentGraph graph;
  std::size_t white_count = 0;
  std::size_t ordinal = 0;
  std::vector<VertexId> whites;
  /// Minimum member of each symmetry class of white vertices.
  std::vector<VertexId> representatives;
};

/// Hash-indexed set of distinct graphs, grouped by white-vertex count. Within
/// a group, ordinals are assigned densely in insertion order.
class GraphStore {
public:
  struct InsertResult {
    bool inserted;
    std::size_t white_count;
    std::size_t ordinal;
  };

  /// Inserts the graph named by `canon` unless already present. The stored
  /// graph is rebuilt with decode(), so `canon` must be canonical.
  InsertResult insert(const CanonicalString& canon);

  const GraphRecord* find(const CanonicalString& canon) const;
  bool contains(const CanonicalString& canon) const { return find(canon) != nullptr; }

  /// Graphs with `white_count` whites in ordinal order (empty if none).
  std::span<const GraphRecord> group(std::size_t white_count) const;
  std::vector<std::size_t> white_counts() const;
  std::size_t size() const noexcept { return index_.size(); }

  friend bool operator==(const GraphStore& a, const GraphStore& b);

private:
  std::map<std::size_t, std::vector<GraphRecord>> groups_;
  std::unordered_map<CanonicalString, std::pair<std::size_t, std::size_t>> index_;
};

using CountTable = std::map<std::size_t, std::size_t>;

struct EnumerationResult {
  EnumerationMode mode = EnumerationMode::Naive;
  std::size_t max_white = 0;
  CountTable distinct_counts;
  CountTable created_counts;
  GraphStore store;
};

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::Naive;
  /// In symmetry-reduced mode, keep using every white vertex of the seeds and
  /// of the 3-white graphs. This matches the reference reduced counts.
  bool exempt_seed_stage = true;
  /// Worker threads for candidate generation; output does not depend on it.
  unsigned threads = 1;
  /// Called after each white count is complete.
  std::function<void(std::size_t n, std::size_t distinct, std::size_t created)> on_level;
};

/// Exhaustive isomorph-free generation of all trivalent graphs with 2 to
/// `max_white` white vertices. Throws std::invalid_argument if max_white < 2.
EnumerationResult enumerate(std::size_t max_white, const EnumerationOptions& options = {});
EnumerationResult enumerate(std::size_t max_white, EnumerationMode mode);

/// White vertices the driver applies operations at, for a stored graph.
std::span<const VertexId> operation_sites(const GraphRecord& record, EnumerationMode mode,
                                          bool exempt_seed_stage = true);

/// Candidate counts the driver produces for each n, computed in closed form
/// from the per-group site counts of `store` (the store must hold every
/// group below the requested n).
CountTable predicted_created_counts(const GraphStore& store, std::size_t max_white,
                                    EnumerationMode mode, bool exempt_seed_stage = true);

/// How a graph with at least four whites arises from smaller ones.
struct Witness {
  Operation op;
  /// One precursor for O1 and O2, two for O1*.
  std::vector<TrivalentGraph> precursors;
  /// Operation site in each precursor.
  std::vector<VertexId> anchors;
};

/// Deconstructs `g` at its lowest-numbered leaf on a weight-1 edge. Throws
/// std::invalid_argument for graphs with fewer than four whites.
Witness inverse_witness(const TrivalentGraph& g);

/// Applies the witness' operation to its precursors.
TrivalentGraph reapply(const Witness& witness);

}  // namespace trivalent
