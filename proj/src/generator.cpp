#include "trivalent/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace trivalent {

namespace {

// Mutable scratch space for the operations; graphs themselves are immutable.
struct Builder {
  std::vector<Color> colors;
  std::vector<std::vector<Neighbor>> adjacency;

  VertexId append(const TrivalentGraph& g) {
    const auto offset = static_cast<VertexId>(colors.size());
    for (VertexId v = 0; v < g.size(); ++v) {
      colors.push_back(g.color(v));
      auto& list = adjacency.emplace_back();
      for (const Neighbor& n : g.neighbors(v)) list.push_back({n.vertex + offset, n.weight});
    }
    return offset;
  }

  VertexId add(Color c) {
    colors.push_back(c);
    adjacency.emplace_back();
    return static_cast<VertexId>(colors.size() - 1);
  }

  void link(VertexId u, VertexId v, EdgeWeight w) {
    adjacency[u].push_back({v, w});
    adjacency[v].push_back({u, w});
  }

  TrivalentGraph build() {
    return TrivalentGraph::from_adjacency(std::move(colors), std::move(adjacency));
  }
};

void require_white(const TrivalentGraph& g, VertexId w, const char* op) {
  if (!g.contains(w)) {
    throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(w) + " not in graph");
  }
  if (!g.is_white(w)) {
    throw std::invalid_argument(std::string(op) + ": vertex " + std::to_string(w) + " is not white");
  }
}

}  // namespace

TrivalentGraph apply_o2(const TrivalentGraph& g, VertexId w) {
  require_white(g, w, "O2");
  Builder b;
  b.append(g);
  const VertexId black = b.add(Color::Black);
  const VertexId leaf = b.add(Color::White);
  b.link(w, black, EdgeWeight::Two);
  b.link(black, leaf, EdgeWeight::One);
  return b.build();
}

TrivalentGraph apply_o1(const TrivalentGraph& g, VertexId w) {
  require_white(g, w, "O1");
  Builder b;
  b.append(g);
  const VertexId black = b.add(Color::Black);
  const VertexId leaf1 = b.add(Color::White);
  const VertexId leaf2 = b.add(Color::White);
  b.link(w, black, EdgeWeight::One);
  b.link(black, leaf1, EdgeWeight::One);
  b.link(black, leaf2, EdgeWeight::One);
  return b.build();
}

TrivalentGraph apply_o1_star(const TrivalentGraph& g1, VertexId w1, const TrivalentGraph& g2,
                             VertexId w2) {
  require_white(g1, w1, "O1*");
  require_white(g2, w2, "O1*");
  Builder b;
  b.append(g1);
  const VertexId offset = b.append(g2);
  const VertexId black = b.add(Color::Black);
  const VertexId leaf = b.add(Color::White);
  b.link(w1, black, EdgeWeight::One);
  b.link(w2 + offset, black, EdgeWeight::One);
  b.link(black, leaf, EdgeWeight::One);
  return b.build();
}

std::string to_string(Operation op) {
  switch (op) {
    case Operation::O1: return "O1";
    case Operation::O2: return "O2";
    case Operation::O1Star: return "O1*";
  }
  return "?";
}

std::string to_string(EnumerationMode mode) {
  return mode == EnumerationMode::Naive ? "naive" : "symmetry";
}

EnumerationMode parse_mode(const std::string& text) {
  if (text == "naive") return EnumerationMode::Naive;
  if (text == "symmetry" || text == "symmetryReduced") return EnumerationMode::SymmetryReduced;
  throw std::invalid_argument("unknown enumeration mode: " + text);
}

GraphStore::InsertResult GraphStore::insert(const CanonicalString& canon) {
  if (auto it = index_.find(canon); it != index_.end()) {
    return {false, it->second.first, it->second.second};
  }
  GraphRecord record;
  record.graph = decode(canon);
  record.canon = canon;
  record.whites = record.graph.white_vertices();
  record.white_count = record.whites.size();
  record.representatives = symmetry_classes(record.graph).representatives();

  auto& group = groups_[record.white_count];
  record.ordinal = group.size();
  index_.emplace(canon, std::make_pair(record.white_count, record.ordinal));
  InsertResult result{true, record.white_count, record.ordinal};
  group.push_back(std::move(record));
  return result;
}

const GraphRecord* GraphStore::find(const CanonicalString& canon) const {
  auto it = index_.find(canon);
  if (it == index_.end()) return nullptr;
  return &groups_.at(it->second.first)[it->second.second];
}

std::span<const GraphRecord> GraphStore::group(std::size_t white_count) const {
  auto it = groups_.find(white_count);
  if (it == groups_.end()) return {};
  return it->second;
}

std::vector<std::size_t> GraphStore::white_counts() const {
  std::vector<std::size_t> out;
  for (const auto& [n, group] : groups_) out.push_back(n);
  return out;
}

bool operator==(const GraphStore& a, const GraphStore& b) {
  if (a.size() != b.size() || a.white_counts() != b.white_counts()) return false;
  for (std::size_t n : a.white_counts()) {
    auto ga = a.group(n);
    auto gb = b.group(n);
    if (!std::equal(ga.begin(), ga.end(), gb.begin(), gb.end(),
                    [](const GraphRecord& x, const GraphRecord& y) {
                      return x.canon == y.canon && x.ordinal == y.ordinal;
                    })) {
      return false;
    }
  }
  return true;
}

std::span<const VertexId> operation_sites(const GraphRecord& record, EnumerationMode mode,
                                          bool exempt_seed_stage) {
  if (mode == EnumerationMode::Naive) return record.whites;
  if (exempt_seed_stage && record.white_count <= 3) return record.whites;
  return record.representatives;
}

namespace {

struct Job {
  Operation op;
  const GraphRecord* first;
  std::span<const GraphRecord> partners;  // O1* only
};

std::vector<CanonicalString> run_job(const Job& job, EnumerationMode mode, bool exempt) {
  std::vector<CanonicalString> out;
  const auto sites = operation_sites(*job.first, mode, exempt);
  for (VertexId w : sites) {
    switch (job.op) {
      case Operation::O2:
        out.push_back(encode(apply_o2(job.first->graph, w)));
        break;
      case Operation::O1:
        out.push_back(encode(apply_o1(job.first->graph, w)));
        break;
      case Operation::O1Star:
        for (const GraphRecord& partner : job.partners) {
          for (VertexId w2 : operation_sites(partner, mode, exempt)) {
            out.push_back(encode(apply_o1_star(job.first->graph, w, partner.graph, w2)));
          }
        }
        break;
    }
  }
  return out;
}

std::vector<std::vector<CanonicalString>> run_jobs(const std::vector<Job>& jobs,
                                                   const EnumerationOptions& options) {
  std::vector<std::vector<CanonicalString>> results(jobs.size());
  const unsigned workers = std::max(1u, options.threads);
  if (workers == 1 || jobs.size() < 2) {
    for (std::size_t k = 0; k < jobs.size(); ++k) {
      results[k] = run_job(jobs[k], options.mode, options.exempt_seed_stage);
    }
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < jobs.size(); k += workers) {
        results[k] = run_job(jobs[k], options.mode, options.exempt_seed_stage);
      }
    });
  }
  pool.clear();  // joins
  return results;
}

}  // namespace

EnumerationResult enumerate(std::size_t max_white, const EnumerationOptions& options) {
  if (max_white < 2) throw std::invalid_argument("max_white must be at least 2");

  EnumerationResult result;
  result.mode = options.mode;
  result.max_white = max_white;
  GraphStore& store = result.store;

  auto finish_level = [&](std::size_t n, std::size_t created) {
    result.created_counts[n] = created;
    result.distinct_counts[n] = store.group(n).size();
    if (options.on_level) options.on_level(n, result.distinct_counts[n], created);
  };

  store.insert(encode(b12()));
  finish_level(2, 1);
  if (max_white == 2) return result;

  {
    std::size_t created = 1;
    store.insert(encode(b111()));
    const GraphRecord& seed = store.group(2).front();
    for (VertexId w : operation_sites(seed, options.mode, options.exempt_seed_stage)) {
      store.insert(encode(apply_o2(seed.graph, w)));
      ++created;
    }
    finish_level(3, created);
  }

  for (std::size_t n = 4; n <= max_white; ++n) {
    std::vector<Job> jobs;
    for (const GraphRecord& g : store.group(n - 1)) jobs.push_back({Operation::O2, &g, {}});
    for (const GraphRecord& g : store.group(n - 2)) jobs.push_back({Operation::O1, &g, {}});
    for (std::size_t i = 2; i + 3 <= n; ++i) {
      const auto partners = store.group(n - 1 - i);
      for (const GraphRecord& g : store.group(i)) jobs.push_back({Operation::O1Star, &g, partners});
    }

    // Jobs only read groups below n; the store's group n is created during the merge.
    const auto results = run_jobs(jobs, options);
    std::size_t created = 0;
    for (const auto& batch : results) {
      for (const CanonicalString& canon : batch) {
        store.insert(canon);
        ++created;
      }
    }
    finish_level(n, created);
  }
  return result;
}

EnumerationResult enumerate(std::size_t max_white, EnumerationMode mode) {
  EnumerationOptions options;
  options.mode = mode;
  return enumerate(max_white, options);
}

CountTable predicted_created_counts(const GraphStore& store, std::size_t max_white,
                                    EnumerationMode mode, bool exempt_seed_stage) {
  std::map<std::size_t, std::size_t> sites;
  for (std::size_t n : store.white_counts()) {
    std::size_t total = 0;
    for (const GraphRecord& g : store.group(n)) total += operation_sites(g, mode, exempt_seed_stage).size();
    sites[n] = total;
  }
  auto s = [&](std::size_t n) { return sites.contains(n) ? sites[n] : 0; };

  CountTable created;
  if (max_white >= 2) created[2] = 1;
  if (max_white >= 3) created[3] = 1 + s(2);
  for (std::size_t n = 4; n <= max_white; ++n) {
    std::size_t total = s(n - 1) + s(n - 2);
    for (std::size_t i = 2; i + 3 <= n; ++i) total += s(i) * s(n - 1 - i);
    created[n] = total;
  }
  return created;
}

namespace {

std::vector<VertexId> component_without(const TrivalentGraph& g, VertexId start,
                                        const std::vector<bool>& removed) {
  std::vector<bool> seen = removed;
  std::vector<VertexId> stack{start};
  std::vector<VertexId> out;
  seen[start] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (const Neighbor& n : g.neighbors(v)) {
      if (!seen[n.vertex]) {
        seen[n.vertex] = true;
        stack.push_back(n.vertex);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexId position_of(const std::vector<VertexId>& sorted, VertexId v) {
  return static_cast<VertexId>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

}  // namespace

Witness inverse_witness(const TrivalentGraph& g) {
  if (auto violations = validate(g); !violations.empty()) {
    throw std::invalid_argument("inverse_witness: not a trivalent graph (" +
                                to_string(violations.front().kind) + ")");
  }
  if (census(g).whites < 4) {
    throw std::invalid_argument("inverse_witness: seeds and 3-white graphs have no precursor");
  }

  VertexId leaf = 0;
  for (VertexId v : g.leaves()) {
    if (g.neighbors(v)[0].weight == EdgeWeight::One) {
      leaf = v;
      break;
    }
  }
  const VertexId black = g.neighbors(leaf)[0].vertex;
  std::vector<VertexId> others;
  for (const Neighbor& n : g.neighbors(black)) {
    if (n.vertex != leaf) others.push_back(n.vertex);
  }
  std::sort(others.begin(), others.end());

  std::vector<bool> removed(g.size(), false);
  removed[leaf] = removed[black] = true;

  if (others.size() == 1) {
    const auto keep = component_without(g, others[0], removed);
    return {Operation::O2, {induced_subgraph(g, keep)}, {position_of(keep, others[0])}};
  }

  auto sibling_leaf = std::find_if(others.begin(), others.end(), [&](VertexId v) { return g.is_leaf(v); });
  if (sibling_leaf != others.end()) {
    const VertexId anchor = others[sibling_leaf == others.begin() ? 1 : 0];
    removed[*sibling_leaf] = true;
    const auto keep = component_without(g, anchor, removed);
    return {Operation::O1, {induced_subgraph(g, keep)}, {position_of(keep, anchor)}};
  }

  const auto left = component_without(g, others[0], removed);
  const auto right = component_without(g, others[1], removed);
  return {Operation::O1Star,
          {induced_subgraph(g, left), induced_subgraph(g, right)},
          {position_of(left, others[0]), position_of(right, others[1])}};
}

TrivalentGraph reapply(const Witness& witness) {
  switch (witness.op) {
    case Operation::O2: return apply_o2(witness.precursors.at(0), witness.anchors.at(0));
    case Operation::O1: return apply_o1(witness.precursors.at(0), witness.anchors.at(0));
    case Operation::O1Star:
      return apply_o1_star(witness.precursors.at(0), witness.anchors.at(0), witness.precursors.at(1),
                           witness.anchors.at(1));
  }
  throw std::logic_error("unknown operation");
}

}  // namespace trivalent
