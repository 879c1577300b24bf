#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "trivalent/graph.hpp"

namespace trivalent::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
};

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Parses lines of the form "u v w color_u color_v" (w in {1,2}, colors W/B).
/// Vertex labels are arbitrary non-negative integers, renumbered densely in
/// order of first appearance. Blank lines and '#' comments are skipped.
TrivalentGraph parse_edge_list(std::string_view text);

/// Reads the DOT subset written by to_dot(): filled nodes are black, edges
/// labeled "2" have weight 2. Node labels are renumbered in ascending order.
TrivalentGraph parse_dot(std::string_view text);

/// Graphs described by `text`: JSON catalog records (one per line), bracket
/// strings (one per line, any rooting or child order), a single DOT graph or
/// a single edge list.
std::vector<TrivalentGraph> parse_graph_input(std::string_view text);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trivalent::cli
