#include "trivalent/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "trivalent/canonical.hpp"
#include "trivalent/generator.hpp"

namespace trivalent {

bool VerifyReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

bool has_sorted_children(std::string_view text) {
  // Each open wrapper remembers where its previous child started.
  struct Frame {
    std::size_t previous_start;
    std::size_t previous_length;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<Frame> frames;
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '0' || c == '2') {
      frames.push_back({kNone, 0});
      starts.push_back(i);
      continue;
    }
    const std::size_t start = starts.back();
    starts.pop_back();
    frames.pop_back();
    if (frames.empty()) continue;
    Frame& parent = frames.back();
    const std::string_view child = text.substr(start, i + 1 - start);
    if (parent.previous_start != kNone &&
        text.substr(parent.previous_start, parent.previous_length) > child) {
      return false;
    }
    parent.previous_start = start;
    parent.previous_length = child.size();
  }
  return true;
}

namespace {

class Recorder {
public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.checked;
    if (ok) return;
    ++failed_;
    if (result_.failures.size() < kMaxMessages) result_.failures.push_back(what);
  }

  CheckResult finish() {
    if (failed_ > kMaxMessages) {
      result_.failures.push_back("... " + std::to_string(failed_ - kMaxMessages) + " more");
    }
    return std::move(result_);
  }

private:
  static constexpr std::size_t kMaxMessages = 10;
  CheckResult result_;
  std::size_t failed_ = 0;
};

std::vector<const GraphRecord*> all_records(const GraphStore& store) {
  std::vector<const GraphRecord*> out;
  for (std::size_t n : store.white_counts()) {
    for (const GraphRecord& r : store.group(n)) out.push_back(&r);
  }
  return out;
}

std::vector<VertexId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::string label(const GraphRecord& r) {
  return "n=" + std::to_string(r.white_count) + " id=" + std::to_string(r.ordinal) + " " + r.canon.str();
}

CheckResult check_structure(const std::vector<const GraphRecord*>& records) {
  Recorder rec("structure");
  for (const GraphRecord* r : records) {
    const TrivalentGraph& g = r->graph;
    rec.expect(validate(g).empty(), "validate failed: " + label(*r));

    const auto leaves = g.leaves();
    rec.expect(std::any_of(leaves.begin(), leaves.end(),
                           [&](VertexId v) { return g.neighbors(v)[0].weight == EdgeWeight::One; }),
               "no weight-1 leaf: " + label(*r));

    std::vector<std::size_t> ecc(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
      ecc[v] = eccentricity(g, v);
      rec.expect((ecc[v] % 2 == 0) == g.is_white(v), "eccentricity parity broken: " + label(*r));
    }
    const std::size_t radius = *std::min_element(ecc.begin(), ecc.end());
    rec.expect(std::count(ecc.begin(), ecc.end(), radius) == 1, "center not unique: " + label(*r));
    rec.expect(ecc[center(g)] == radius, "two-sweep center is not the argmin: " + label(*r));

    const std::string& s = r->canon.str();
    rec.expect(s.size() == 2 * g.size(), "string length != 2|V|: " + label(*r));
    rec.expect(s.front() == '0' && s.back() == '1', "outer wrapper is not 0...1: " + label(*r));
    rec.expect(has_sorted_children(s), "children not sorted: " + label(*r));
  }
  return rec.finish();
}

CheckResult check_oracle(const std::vector<const GraphRecord*>& records, std::size_t limit) {
  Recorder rec("canonical-vs-oracle");
  std::vector<const GraphRecord*> small;
  for (const GraphRecord* r : records) {
    if (r->graph.size() <= limit) small.push_back(r);
  }
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i + 1; j < small.size(); ++j) {
      const bool same_string = small[i]->canon == small[j]->canon;
      const bool iso = is_isomorphic_bruteforce(small[i]->graph, small[j]->graph, limit);
      rec.expect(same_string == iso,
                 "string equality disagrees with oracle: " + label(*small[i]) + " vs " + label(*small[j]));
    }
  }
  return rec.finish();
}

CheckResult check_round_trip(const std::vector<const GraphRecord*>& records, std::size_t limit,
                             std::mt19937_64& rng) {
  Recorder rec("round-trip");
  for (const GraphRecord* r : records) {
    const TrivalentGraph shuffled = relabel(r->graph, random_permutation(r->graph.size(), rng));
    const CanonicalString s = encode(shuffled);
    rec.expect(s == r->canon, "relabeling changed the encoding: " + label(*r));
    const TrivalentGraph back = decode(s);
    rec.expect(encode(back) == s, "encode(decode(s)) != s: " + label(*r));
    if (shuffled.size() <= limit) {
      rec.expect(is_isomorphic_bruteforce(back, shuffled, limit), "decode(encode(g)) not isomorphic to g: " + label(*r));
    }
  }
  return rec.finish();
}

CheckResult check_operations(const std::vector<const GraphRecord*>& records) {
  Recorder rec("operation-closure");
  const TrivalentGraph partner = b12();
  for (const GraphRecord* r : records) {
    const std::size_t k = r->white_count;
    for (VertexId w : r->whites) {
      const auto o2 = apply_o2(r->graph, w);
      const auto o1 = apply_o1(r->graph, w);
      const auto o1s = apply_o1_star(r->graph, w, partner, 1);
      rec.expect(validate(o2).empty() && census(o2).whites == k + 1, "O2 result wrong: " + label(*r));
      rec.expect(validate(o1).empty() && census(o1).whites == k + 2, "O1 result wrong: " + label(*r));
      rec.expect(validate(o1s).empty() && census(o1s).whites == k + 2 + 1, "O1* result wrong: " + label(*r));
    }
  }
  return rec.finish();
}

CheckResult check_symmetry(const std::vector<const GraphRecord*>& records) {
  Recorder rec("symmetric-sites");
  for (const GraphRecord* r : records) {
    for (const auto& block : symmetry_classes(r->graph).blocks) {
      const CanonicalString first = encode(apply_o2(r->graph, block.front()));
      for (VertexId v : block) {
        rec.expect(encode(apply_o2(r->graph, v)) == first, "symmetric vertices give different O2 results: " + label(*r));
      }
    }
  }
  return rec.finish();
}

CheckResult check_witnesses(const std::vector<const GraphRecord*>& records) {
  Recorder rec("inverse-witness");
  for (const GraphRecord* r : records) {
    if (r->white_count < 4) continue;
    rec.expect(encode(reapply(inverse_witness(r->graph))) == r->canon, "witness does not rebuild: " + label(*r));
  }
  return rec.finish();
}

CheckResult check_counts(const EnumerationResult& naive, const EnumerationResult& reduced) {
  Recorder rec("count-arithmetic");
  for (const EnumerationResult* result : {&naive, &reduced}) {
    const auto predicted = predicted_created_counts(result->store, result->max_white, result->mode);
    for (const auto& [n, created] : result->created_counts) {
      rec.expect(predicted.at(n) == created, to_string(result->mode) + " created count at n=" +
                                                 std::to_string(n) + " differs from formula");
    }
  }
  for (const auto& [n, distinct] : naive.distinct_counts) {
    rec.expect(reduced.distinct_counts.at(n) == distinct, "modes disagree on distinct count at n=" + std::to_string(n));
    rec.expect(distinct <= reduced.created_counts.at(n) && reduced.created_counts.at(n) <= naive.created_counts.at(n),
               "reduction bound violated at n=" + std::to_string(n));
    auto a = naive.store.group(n);
    auto b = reduced.store.group(n);
    std::set<CanonicalString> sa, sb;
    for (const auto& r : a) sa.insert(r.canon);
    for (const auto& r : b) sb.insert(r.canon);
    rec.expect(sa == sb, "modes produced different graphs at n=" + std::to_string(n));
  }
  return rec.finish();
}

}  // namespace

VerifyReport verify_enumeration(const VerifyOptions& options) {
  EnumerationOptions enum_options;
  enum_options.threads = options.threads;
  enum_options.mode = EnumerationMode::Naive;
  const EnumerationResult naive = enumerate(options.max_white, enum_options);
  enum_options.mode = EnumerationMode::SymmetryReduced;
  const EnumerationResult reduced = enumerate(options.max_white, enum_options);

  const auto records = all_records(naive.store);
  std::mt19937_64 rng(options.seed);

  VerifyReport report;
  report.checks.push_back(check_structure(records));
  report.checks.push_back(check_oracle(records, options.oracle_vertex_limit));
  report.checks.push_back(check_round_trip(records, options.oracle_vertex_limit, rng));
  report.checks.push_back(check_operations(records));
  report.checks.push_back(check_symmetry(records));
  report.checks.push_back(check_witnesses(records));
  report.checks.push_back(check_counts(naive, reduced));
  return report;
}

}  // namespace trivalent
