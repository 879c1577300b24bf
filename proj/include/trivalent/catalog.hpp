#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trivalent/generator.hpp"
#include "trivalent/graph.hpp"

namespace trivalent {

/// Nomenclature record [|W|, |B|, |L|, shortest leaf path, largest leaf path, ID].
/// Leaf paths are unweighted leaf-to-leaf distances.
struct Tag {
  std::size_t white_count = 0;
  std::size_t black_count = 0;
  std::size_t leaf_count = 0;
  std::size_t shortest_leaf_path = 0;
  std::size_t largest_leaf_path = 0;
  std::size_t id = 0;

  friend bool operator==(const Tag&, const Tag&) = default;
};

/// "[W,B,L,short,long,id]"
std::string to_string(const Tag& tag);

Tag make_tag(const TrivalentGraph& g, std::size_t id);

/// Undirected DOT graph: black vertices are filled circles, white vertices
/// unfilled ones, weight-2 edges carry the label "2".
std::string to_dot(const TrivalentGraph& g, std::string_view name = "G");

/// One JSON-lines record: {"n":..,"id":..,"canon":"..","tag":[..]}
std::string catalog_record(const GraphRecord& record);

class CatalogError : public std::runtime_error {
public:
  CatalogError(std::size_t line, const std::string& what)
      : std::runtime_error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Writes every stored graph, grouped by white count and in ordinal order.
void write_catalog(const EnumerationResult& result, std::ostream& out);

/// Reads a catalog written by write_catalog, re-decoding and re-checking every
/// record. Created counts are not stored in the file; they are rebuilt for
/// `mode` from the catalog contents with predicted_created_counts.
/// Throws CatalogError naming the offending line.
EnumerationResult read_catalog(std::istream& in, EnumerationMode mode = EnumerationMode::Naive);

/// CSV with header "n,total,created,reduction_percent". The reduction column
/// is blank for naive runs; for symmetry-reduced runs it is measured against
/// `naive_created`, or against the naive counts predicted from the store when
/// no baseline is given.
std::string stats_table(const EnumerationResult& result, const CountTable* naive_created = nullptr);

}  // namespace trivalent
