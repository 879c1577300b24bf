#include "trivalent/graph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <tuple>

namespace trivalent {

EdgeWeight EdgeWeight::from_int(int value) {
  if (value == 1) return One;
  if (value == 2) return Two;
  throw std::invalid_argument("edge weight must be 1 or 2, got " + std::to_string(value));
}

TrivalentGraph::TrivalentGraph(std::vector<Color> colors, std::span<const Edge> edges)
    : colors_(std::move(colors)), adjacency_(colors_.size()) {
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v)) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self loop at vertex " + std::to_string(e.u));
    }
    adjacency_[e.u].push_back({e.v, e.weight});
    adjacency_[e.v].push_back({e.u, e.weight});
  }
}

TrivalentGraph TrivalentGraph::from_adjacency(std::vector<Color> colors,
                                              std::vector<std::vector<Neighbor>> adjacency) {
  if (colors.size() != adjacency.size()) {
    throw std::invalid_argument("colors and adjacency sizes differ");
  }
  for (std::size_t v = 0; v < adjacency.size(); ++v) {
    for (const Neighbor& n : adjacency[v]) {
      if (n.vertex >= colors.size()) {
        throw std::invalid_argument("neighbor id out of range at vertex " + std::to_string(v));
      }
      if (n.vertex == v) {
        throw std::invalid_argument("self loop at vertex " + std::to_string(v));
      }
    }
  }
  TrivalentGraph g;
  g.colors_ = std::move(colors);
  g.adjacency_ = std::move(adjacency);
  return g;
}

std::optional<EdgeWeight> TrivalentGraph::weight(VertexId u, VertexId v) const {
  for (const Neighbor& n : neighbors(u)) {
    if (n.vertex == v) return n.weight;
  }
  return std::nullopt;
}

std::vector<Edge> TrivalentGraph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < size(); ++u) {
    for (const Neighbor& n : adjacency_[u]) {
      if (u < n.vertex) out.push_back({u, n.vertex, n.weight});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

std::size_t TrivalentGraph::edge_count() const {
  std::size_t half_edges = 0;
  for (const auto& list : adjacency_) half_edges += list.size();
  return half_edges / 2;
}

std::vector<VertexId> TrivalentGraph::white_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    if (colors_[v] == Color::White) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> TrivalentGraph::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < size(); ++v) {
    if (adjacency_[v].size() == 1) out.push_back(v);
  }
  return out;
}

TrivalentGraph TrivalentGraph::rooted_at(VertexId v) const {
  if (!contains(v)) throw std::out_of_range("root vertex not in graph: " + std::to_string(v));
  TrivalentGraph copy = *this;
  copy.root_ = v;
  return copy;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ViolationKind::NotATree: return "NotATree";
    case ViolationKind::BipartiteViolation: return "BipartiteViolation";
    case ViolationKind::BlackLeaf: return "BlackLeaf";
    case ViolationKind::WeightPatternViolation: return "WeightPatternViolation";
    case ViolationKind::NoWeightOneLeaf: return "NoWeightOneLeaf";
  }
  return "Unknown";
}

namespace {

bool is_connected(const TrivalentGraph& g) {
  if (g.size() == 0) return false;
  std::vector<bool> seen(g.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const Neighbor& n : g.neighbors(v)) {
      if (!seen[n.vertex]) {
        seen[n.vertex] = true;
        ++reached;
        stack.push_back(n.vertex);
      }
    }
  }
  return reached == g.size();
}

bool black_pattern_ok(const TrivalentGraph& g, VertexId b) {
  auto nbrs = g.neighbors(b);
  if (nbrs.size() == 2) {
    std::array<int, 2> w{nbrs[0].weight.value(), nbrs[1].weight.value()};
    std::sort(w.begin(), w.end());
    return w == std::array<int, 2>{1, 2};
  }
  if (nbrs.size() == 3) {
    return std::all_of(nbrs.begin(), nbrs.end(),
                       [](const Neighbor& n) { return n.weight == EdgeWeight::One; });
  }
  return false;
}

}  // namespace

std::vector<Violation> validate(const TrivalentGraph& g) {
  std::vector<Violation> out;

  {
    Violation v{ViolationKind::AsymmetricAdjacency, {}, "edge missing its reverse or weights disagree"};
    for (VertexId u = 0; u < g.size(); ++u) {
      for (const Neighbor& n : g.neighbors(u)) {
        auto back = g.weight(n.vertex, u);
        if (!back || *back != n.weight) {
          v.vertices.push_back(u);
          v.vertices.push_back(n.vertex);
        }
      }
    }
    if (!v.vertices.empty()) out.push_back(std::move(v));
  }

  if (g.size() == 0 || !is_connected(g) || g.edge_count() + 1 != g.size()) {
    out.push_back({ViolationKind::NotATree,
                   {},
                   "expected a connected graph with " +
                       std::to_string(g.size() == 0 ? 0 : g.size() - 1) + " edges, found " +
                       std::to_string(g.edge_count()) + (is_connected(g) ? "" : " (disconnected)")});
  }

  {
    Violation v{ViolationKind::BipartiteViolation, {}, "edge joins two vertices of the same color"};
    for (const Edge& e : g.edges()) {
      if (g.color(e.u) == g.color(e.v)) {
        v.vertices.push_back(e.u);
        v.vertices.push_back(e.v);
      }
    }
    if (!v.vertices.empty()) out.push_back(std::move(v));
  }

  {
    Violation v{ViolationKind::BlackLeaf, {}, "leaf vertex is black"};
    for (VertexId u : g.leaves()) {
      if (g.is_black(u)) v.vertices.push_back(u);
    }
    if (!v.vertices.empty()) out.push_back(std::move(v));
  }

  {
    Violation v{ViolationKind::WeightPatternViolation,
                {},
                "black vertex must have weights {1,2} (degree 2) or {1,1,1} (degree 3)"};
    for (VertexId u = 0; u < g.size(); ++u) {
      if (g.is_black(u) && !black_pattern_ok(g, u)) v.vertices.push_back(u);
    }
    if (!v.vertices.empty()) out.push_back(std::move(v));
  }

  {
    auto leaves = g.leaves();
    bool found = std::any_of(leaves.begin(), leaves.end(), [&](VertexId u) {
      return g.neighbors(u)[0].weight == EdgeWeight::One;
    });
    if (!found) out.push_back({ViolationKind::NoWeightOneLeaf, leaves, "no leaf hangs on a weight-1 edge"});
  }

  return out;
}

Census census(const TrivalentGraph& g) {
  Census c;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.is_white(v)) {
      ++c.whites;
    } else {
      ++c.blacks;
    }
    if (g.is_leaf(v)) ++c.leaves;
  }
  return c;
}

TrivalentGraph b12() {
  const std::array<Edge, 2> edges{{{0, 1, EdgeWeight::One}, {0, 2, EdgeWeight::Two}}};
  return TrivalentGraph({Color::Black, Color::White, Color::White}, edges);
}

TrivalentGraph b111() {
  const std::array<Edge, 3> edges{
      {{0, 1, EdgeWeight::One}, {0, 2, EdgeWeight::One}, {0, 3, EdgeWeight::One}}};
  return TrivalentGraph({Color::Black, Color::White, Color::White, Color::White}, edges);
}

TrivalentGraph relabel(const TrivalentGraph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.size()) {
    throw std::invalid_argument("permutation size does not match vertex count");
  }
  std::vector<bool> hit(g.size(), false);
  for (VertexId p : perm) {
    if (p >= g.size() || hit[p]) throw std::invalid_argument("relabeling is not a bijection");
    hit[p] = true;
  }

  std::vector<Color> colors(g.size());
  std::vector<std::vector<Neighbor>> adjacency(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    colors[perm[v]] = g.color(v);
    for (const Neighbor& n : g.neighbors(v)) {
      adjacency[perm[v]].push_back({perm[n.vertex], n.weight});
    }
  }
  TrivalentGraph out = TrivalentGraph::from_adjacency(std::move(colors), std::move(adjacency));
  if (g.root()) out = out.rooted_at(perm[*g.root()]);
  return out;
}

namespace {

// (color, degree, sorted incident weights); two vertices can only correspond
// under an isomorphism if these agree.
using Signature = std::tuple<Color, std::size_t, std::vector<int>>;

Signature signature_of(const TrivalentGraph& g, VertexId v) {
  std::vector<int> weights;
  for (const Neighbor& n : g.neighbors(v)) weights.push_back(n.weight.value());
  std::sort(weights.begin(), weights.end());
  return {g.color(v), g.degree(v), std::move(weights)};
}

// 0 = not adjacent, otherwise the edge weight.
std::vector<std::vector<int>> weight_matrix(const TrivalentGraph& g) {
  std::vector<std::vector<int>> m(g.size(), std::vector<int>(g.size(), 0));
  for (VertexId v = 0; v < g.size(); ++v) {
    for (const Neighbor& n : g.neighbors(v)) m[v][n.vertex] = n.weight.value();
  }
  return m;
}

std::vector<VertexId> traversal_order(const TrivalentGraph& g) {
  std::vector<VertexId> order;
  std::vector<bool> seen(g.size(), false);
  for (VertexId start = 0; start < g.size(); ++start) {
    if (seen[start]) continue;
    std::deque<VertexId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (const Neighbor& n : g.neighbors(v)) {
        if (!seen[n.vertex]) {
          seen[n.vertex] = true;
          queue.push_back(n.vertex);
        }
      }
    }
  }
  return order;
}

}  // namespace

bool is_isomorphic_bruteforce(const TrivalentGraph& g, const TrivalentGraph& h,
                              std::size_t vertex_limit) {
  if (g.size() > vertex_limit || h.size() > vertex_limit) {
    throw OracleSizeError("brute-force isomorphism limited to " + std::to_string(vertex_limit) +
                          " vertices; compare canonical strings instead");
  }
  if (g.size() != h.size() || g.edge_count() != h.edge_count()) return false;

  const std::size_t n = g.size();
  std::vector<Signature> sig_g(n), sig_h(n);
  for (VertexId v = 0; v < n; ++v) {
    sig_g[v] = signature_of(g, v);
    sig_h[v] = signature_of(h, v);
  }
  {
    auto a = sig_g, b = sig_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }

  const auto wg = weight_matrix(g);
  const auto wh = weight_matrix(h);
  const auto order = traversal_order(g);
  std::vector<VertexId> image(n);
  std::vector<bool> used(n, false);

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const VertexId x = order[depth];
    for (VertexId y = 0; y < n; ++y) {
      if (used[y] || sig_g[x] != sig_h[y]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const VertexId prev = order[k];
        consistent = wg[x][prev] == wh[y][image[prev]];
      }
      if (!consistent) continue;
      used[y] = true;
      image[x] = y;
      if (extend(depth + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return extend(0);
}

TrivalentGraph induced_subgraph(const TrivalentGraph& g, std::span<const VertexId> keep) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> new_id(g.size(), kAbsent);
  std::vector<Color> colors;
  colors.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (new_id.at(keep[i]) != kAbsent) throw std::invalid_argument("duplicate vertex in subset");
    new_id[keep[i]] = static_cast<VertexId>(i);
    colors.push_back(g.color(keep[i]));
  }
  std::vector<std::vector<Neighbor>> adjacency(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const Neighbor& n : g.neighbors(keep[i])) {
      if (new_id[n.vertex] != kAbsent) adjacency[i].push_back({new_id[n.vertex], n.weight});
    }
  }
  return TrivalentGraph::from_adjacency(std::move(colors), std::move(adjacency));
}

}  // namespace trivalent
