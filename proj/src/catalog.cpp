#include "trivalent/catalog.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace trivalent {

using ordered_json = nlohmann::ordered_json;

std::string to_string(const Tag& tag) {
  std::ostringstream os;
  os << '[' << tag.white_count << ',' << tag.black_count << ',' << tag.leaf_count << ','
     << tag.shortest_leaf_path << ',' << tag.largest_leaf_path << ',' << tag.id << ']';
  return os.str();
}

namespace {

std::vector<std::size_t> distances_from(const TrivalentGraph& g, VertexId source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const Neighbor& n : g.neighbors(v)) {
      if (dist[n.vertex] == kUnreached) {
        dist[n.vertex] = dist[v] + 1;
        queue.push_back(n.vertex);
      }
    }
  }
  return dist;
}

}  // namespace

Tag make_tag(const TrivalentGraph& g, std::size_t id) {
  const Census c = census(g);
  const auto leaves = g.leaves();
  if (leaves.size() < 2) throw std::logic_error("make_tag: a trivalent graph has at least two leaves");

  std::size_t shortest = std::numeric_limits<std::size_t>::max();
  std::size_t largest = 0;
  for (std::size_t i = 0; i + 1 < leaves.size(); ++i) {
    const auto dist = distances_from(g, leaves[i]);
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      shortest = std::min(shortest, dist[leaves[j]]);
      largest = std::max(largest, dist[leaves[j]]);
    }
  }
  return {c.whites, c.blacks, c.leaves, shortest, largest, id};
}

std::string to_dot(const TrivalentGraph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle, label=\"\", width=0.3, fixedsize=true];\n";
  for (VertexId v = 0; v < g.size(); ++v) {
    os << "  " << v;
    if (g.is_black(v)) os << " [style=filled, fillcolor=black]";
    os << ";\n";
  }
  for (const Edge& e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (e.weight == EdgeWeight::Two) os << " [label=\"2\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string catalog_record(const GraphRecord& record) {
  const Tag tag = make_tag(record.graph, record.ordinal);
  ordered_json j;
  j["n"] = record.white_count;
  j["id"] = record.ordinal;
  j["canon"] = record.canon.str();
  j["tag"] = {tag.white_count, tag.black_count, tag.leaf_count, tag.shortest_leaf_path,
              tag.largest_leaf_path, tag.id};
  return j.dump();
}

void write_catalog(const EnumerationResult& result, std::ostream& out) {
  for (std::size_t n : result.store.white_counts()) {
    for (const GraphRecord& record : result.store.group(n)) out << catalog_record(record) << '\n';
  }
}

EnumerationResult read_catalog(std::istream& in, EnumerationMode mode) {
  EnumerationResult result;
  result.mode = mode;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;

    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw CatalogError(line_no, std::string("malformed JSON: ") + e.what());
    }

    std::size_t n = 0, id = 0;
    std::string canon;
    std::vector<std::size_t> tag_fields;
    try {
      n = j.at("n").get<std::size_t>();
      id = j.at("id").get<std::size_t>();
      canon = j.at("canon").get<std::string>();
      tag_fields = j.at("tag").get<std::vector<std::size_t>>();
    } catch (const nlohmann::json::exception& e) {
      throw CatalogError(line_no, std::string("missing or mistyped field: ") + e.what());
    }
    if (tag_fields.size() != 6) throw CatalogError(line_no, "tag must have six fields");

    GraphStore::InsertResult inserted;
    try {
      inserted = result.store.insert(CanonicalString(canon));
    } catch (const DecodeError& e) {
      throw CatalogError(line_no, std::string("canon does not re-encode: ") + e.what());
    }
    if (!inserted.inserted) throw CatalogError(line_no, "duplicate canon " + canon);
    if (inserted.white_count != n) {
      throw CatalogError(line_no, "n=" + std::to_string(n) + " but canon has " +
                                      std::to_string(inserted.white_count) + " white vertices");
    }
    if (inserted.ordinal != id) {
      throw CatalogError(line_no, "id " + std::to_string(id) + " out of sequence, expected " +
                                      std::to_string(inserted.ordinal));
    }
    const Tag expected = make_tag(result.store.group(n)[id].graph, id);
    const Tag given{tag_fields[0], tag_fields[1], tag_fields[2],
                    tag_fields[3], tag_fields[4], tag_fields[5]};
    if (given != expected) {
      throw CatalogError(line_no, "tag " + to_string(given) + " does not match graph, expected " +
                                      to_string(expected));
    }
  }

  for (std::size_t n : result.store.white_counts()) {
    result.distinct_counts[n] = result.store.group(n).size();
    result.max_white = std::max(result.max_white, n);
  }
  result.created_counts = predicted_created_counts(result.store, result.max_white, mode);
  return result;
}

std::string stats_table(const EnumerationResult& result, const CountTable* naive_created) {
  CountTable predicted;
  if (result.mode == EnumerationMode::SymmetryReduced && naive_created == nullptr) {
    predicted = predicted_created_counts(result.store, result.max_white, EnumerationMode::Naive);
    naive_created = &predicted;
  }

  std::ostringstream os;
  os << "n,total,created,reduction_percent\n";
  for (const auto& [n, total] : result.distinct_counts) {
    const auto created_it = result.created_counts.find(n);
    const std::size_t created = created_it == result.created_counts.end() ? 0 : created_it->second;
    os << n << ',' << total << ',' << created << ',';
    if (result.mode == EnumerationMode::SymmetryReduced) {
      const auto base_it = naive_created->find(n);
      if (base_it != naive_created->end() && base_it->second > 0) {
        const double base = static_cast<double>(base_it->second);
        const double percent = 100.0 * (base - static_cast<double>(created)) / base;
        os << std::fixed << std::setprecision(2) << percent;
        os.unsetf(std::ios::floatfield);
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace trivalent
