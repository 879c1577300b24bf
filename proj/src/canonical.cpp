#include "trivalent/canonical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace trivalent {

namespace {

constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

struct RootedView {
  std::vector<VertexId> order;   // BFS order from the root
  std::vector<VertexId> parent;  // kNoVertex for the root
  std::vector<std::size_t> depth;
};

RootedView root_view(const TrivalentGraph& g, VertexId root) {
  if (!g.contains(root)) throw std::out_of_range("vertex not in graph: " + std::to_string(root));
  RootedView view;
  view.parent.assign(g.size(), kNoVertex);
  view.depth.assign(g.size(), 0);
  std::vector<bool> seen(g.size(), false);
  std::deque<VertexId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    view.order.push_back(v);
    for (const Neighbor& n : g.neighbors(v)) {
      if (seen[n.vertex]) continue;
      seen[n.vertex] = true;
      view.parent[n.vertex] = v;
      view.depth[n.vertex] = view.depth[v] + 1;
      queue.push_back(n.vertex);
    }
  }
  return view;
}

std::vector<std::string> names_from(const TrivalentGraph& g, const RootedView& view) {
  std::vector<std::string> names(g.size());
  std::vector<std::vector<const std::string*>> child_names(g.size());
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const VertexId v = *it;
    auto& kids = child_names[v];
    std::sort(kids.begin(), kids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });

    const VertexId father = view.parent[v];
    const bool heavy = father != kNoVertex && g.weight(v, father) == EdgeWeight::Two;
    std::string& name = names[v];
    std::size_t length = 2;
    for (const std::string* k : kids) length += k->size();
    name.reserve(length);
    name.push_back(heavy ? '2' : '0');
    for (const std::string* k : kids) name += *k;
    name.push_back(heavy ? '3' : '1');

    if (father != kNoVertex) child_names[father].push_back(&name);
  }
  return names;
}

}  // namespace

std::size_t eccentricity(const TrivalentGraph& g, VertexId v) {
  const RootedView view = root_view(g, v);
  return *std::max_element(view.depth.begin(), view.depth.end());
}

std::vector<VertexId> farthest_path(const TrivalentGraph& g, VertexId v) {
  const RootedView view = root_view(g, v);
  std::vector<std::size_t> height(g.size(), 0);
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const VertexId u = *it;
    if (view.parent[u] != kNoVertex) {
      height[view.parent[u]] = std::max(height[view.parent[u]], height[u] + 1);
    }
  }

  std::vector<VertexId> path{v};
  VertexId current = v;
  while (height[current] > 0) {
    VertexId next = kNoVertex;
    for (const Neighbor& n : g.neighbors(current)) {
      if (n.vertex == view.parent[current] || height[n.vertex] + 1 != height[current]) continue;
      next = std::min(next, n.vertex);
    }
    path.push_back(next);
    current = next;
  }
  return path;
}

VertexId center(const TrivalentGraph& g) {
  if (g.size() == 0) throw std::invalid_argument("empty graph has no center");
  const auto first = farthest_path(g, 0);
  const auto diameter = farthest_path(g, first.back());
  if (diameter.size() % 2 == 0) {
    throw std::invalid_argument("odd diameter: graph has two central vertices");
  }
  return diameter[diameter.size() / 2];
}

std::vector<std::string> tuple_names(const TrivalentGraph& g) {
  if (!g.root()) throw std::invalid_argument("tuple names require a rooted graph");
  return names_from(g, root_view(g, *g.root()));
}

std::string ahu_modified(const TrivalentGraph& g, VertexId v) {
  if (!g.contains(v)) throw std::out_of_range("vertex not in graph: " + std::to_string(v));
  return tuple_names(g)[v];
}

CanonicalString encode(const TrivalentGraph& g) {
  const VertexId c = center(g);
  auto names = names_from(g, root_view(g, c));
  return CanonicalString(std::move(names[c]));
}

TrivalentGraph parse_rooted_string(std::string_view text) {
  if (text.empty()) throw DecodeError(DecodeErrorKind::Empty, 0, "empty string");

  std::vector<std::size_t> depth;
  std::vector<Edge> edges;
  std::vector<std::pair<VertexId, char>> open;  // vertex, expected closer

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '3') {
      throw DecodeError(DecodeErrorKind::IllegalCharacter, i,
                        "illegal character at offset " + std::to_string(i));
    }
    const bool opener = c == '0' || c == '2';
    if (open.empty() && i > 0) {
      throw DecodeError(DecodeErrorKind::Unbalanced, i,
                        "characters after the root closes at offset " + std::to_string(i));
    }
    if (opener) {
      const auto v = static_cast<VertexId>(depth.size());
      if (open.empty()) {
        depth.push_back(0);
      } else {
        const VertexId father = open.back().first;
        depth.push_back(depth[father] + 1);
        edges.push_back({father, v, c == '0' ? EdgeWeight::One : EdgeWeight::Two});
      }
      open.emplace_back(v, c == '0' ? '1' : '3');
    } else {
      if (open.empty() || open.back().second != c) {
        throw DecodeError(DecodeErrorKind::Unbalanced, i,
                          "unexpected closer at offset " + std::to_string(i));
      }
      open.pop_back();
    }
  }
  if (!open.empty()) {
    throw DecodeError(DecodeErrorKind::Unbalanced, text.size(),
                      std::to_string(open.size()) + " wrapper(s) left open");
  }

  const std::size_t height = *std::max_element(depth.begin(), depth.end());
  std::vector<Color> colors(depth.size());
  for (std::size_t v = 0; v < depth.size(); ++v) {
    // Vertices at even distance from a black root are black, and vice versa.
    const bool black = (height + depth[v]) % 2 == 1;
    colors[v] = black ? Color::Black : Color::White;
  }
  return TrivalentGraph(std::move(colors), edges).rooted_at(0);
}

TrivalentGraph decode(std::string_view text) {
  TrivalentGraph g = parse_rooted_string(text);
  const auto violations = validate(g);
  if (!violations.empty()) {
    std::string what = "decoded graph is not a trivalent graph:";
    for (const auto& v : violations) what += " " + to_string(v.kind);
    throw DecodeError(DecodeErrorKind::InvalidGraph, text.size(), what);
  }
  if (encode(g).str() != text) {
    throw DecodeError(DecodeErrorKind::NotCanonical, text.size(),
                      "string is not in canonical form (unsorted children or root is not the center)");
  }
  return g;
}

std::vector<VertexId> SymmetryClasses::representatives() const {
  std::vector<VertexId> reps;
  reps.reserve(blocks.size());
  for (const auto& block : blocks) reps.push_back(block.front());
  std::sort(reps.begin(), reps.end());
  return reps;
}

SymmetryClasses symmetry_classes(const TrivalentGraph& g) {
  const VertexId c = center(g);
  const RootedView view = root_view(g, c);
  const auto names = names_from(g, view);

  // Two vertices share an orbit iff their fathers share an orbit and their
  // own tuple names (which carry the father-edge weight) agree.
  std::vector<std::size_t> orbit(g.size(), 0);
  std::map<std::pair<std::size_t, std::string_view>, std::size_t> interned;
  std::size_t next_orbit = 1;  // 0 is the root's own orbit
  for (VertexId v : view.order) {
    if (v == c) continue;
    auto key = std::make_pair(orbit[view.parent[v]], std::string_view(names[v]));
    auto [it, inserted] = interned.try_emplace(key, next_orbit);
    if (inserted) ++next_orbit;
    orbit[v] = it->second;
  }

  std::map<std::size_t, std::vector<VertexId>> grouped;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.is_white(v)) grouped[orbit[v]].push_back(v);
  }
  SymmetryClasses out;
  for (auto& [id, block] : grouped) out.blocks.push_back(std::move(block));
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace trivalent
