#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/graph.hpp"

namespace trivalent {

struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

struct VerifyOptions {
  std::size_t max_white = 6;
  /// Graphs larger than this skip the brute-force oracle comparisons.
  std::size_t oracle_vertex_limit = kDefaultOracleVertexLimit;
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
};

/// True iff every wrapper's child substrings appear in nondecreasing order.
/// `text` must be balanced.
bool has_sorted_children(std::string_view text);

/// Enumerates up to `max_white` whites and checks the canonical form against
/// the brute-force oracle, round trips, structural invariants, operation
/// closure, inverse witnesses, count arithmetic and mode equivalence.
VerifyReport verify_enumeration(const VerifyOptions& options);

}  // namespace trivalent
