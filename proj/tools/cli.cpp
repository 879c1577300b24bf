#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <tuple>

#include <CLI11.hpp>
#include <json.hpp>

#include "trivalent/canonical.hpp"
#include "trivalent/catalog.hpp"
#include "trivalent/generator.hpp"
#include "trivalent/verify.hpp"

namespace trivalent::cli {

namespace fs = std::filesystem;

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

bool is_bracket_string(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '3'; });
}

Color parse_color(const std::string& token, std::size_t line_no) {
  if (token == "W" || token == "w") return Color::White;
  if (token == "B" || token == "b") return Color::Black;
  throw InputError("edge list line " + std::to_string(line_no) + ": color must be W or B, got '" + token + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << contents;
}

void require_valid(const TrivalentGraph& g) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  std::string what = "input is not a trivalent graph:";
  for (const auto& v : violations) what += " " + to_string(v.kind);
  throw InputError(what);
}

std::string single_record(const CanonicalString& canon) {
  GraphStore store;
  const auto inserted = store.insert(canon);
  return catalog_record(store.group(inserted.white_count).front());
}

EnumerationResult load_catalog(const std::string& path, EnumerationMode mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return read_catalog(in, mode);
}

}  // namespace

TrivalentGraph parse_edge_list(std::string_view text) {
  std::map<long long, VertexId> ids;
  std::vector<Color> colors;
  std::vector<Edge> edges;

  auto vertex = [&](long long label, Color color, std::size_t line_no) {
    if (label < 0) throw InputError("edge list line " + std::to_string(line_no) + ": negative vertex label");
    auto [it, inserted] = ids.try_emplace(label, static_cast<VertexId>(colors.size()));
    if (inserted) {
      colors.push_back(color);
    } else if (colors[it->second] != color) {
      throw InputError("edge list line " + std::to_string(line_no) + ": vertex " + std::to_string(label) +
                       " given two colors");
    }
    return it->second;
  };

  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream fields{std::string(line)};
    long long u = 0, v = 0;
    int w = 0;
    std::string cu, cv, extra;
    if (!(fields >> u >> v >> w >> cu >> cv) || (fields >> extra)) {
      throw InputError("edge list line " + std::to_string(line_no) + ": expected 'u v w color_u color_v'");
    }
    EdgeWeight weight = EdgeWeight::One;
    try {
      weight = EdgeWeight::from_int(w);
    } catch (const std::invalid_argument& e) {
      throw InputError("edge list line " + std::to_string(line_no) + ": " + e.what());
    }
    const VertexId a = vertex(u, parse_color(cu, line_no), line_no);
    const VertexId b = vertex(v, parse_color(cv, line_no), line_no);
    if (a == b) throw InputError("edge list line " + std::to_string(line_no) + ": self loop");
    edges.push_back({a, b, weight});
  }
  if (colors.empty()) throw InputError("edge list is empty");
  return TrivalentGraph(std::move(colors), edges);
}

TrivalentGraph parse_dot(std::string_view text) {
  static const std::regex node_re(R"(^\s*(\d+)\s*(\[([^\]]*)\])?\s*;?\s*$)");
  static const std::regex edge_re(R"(^\s*(\d+)\s*--\s*(\d+)\s*(\[([^\]]*)\])?\s*;?\s*$)");
  static const std::regex skip_re(R"(^\s*((strict\s+)?graph\b.*\{|node\s*\[.*|edge\s*\[.*|\}|)\s*$)");

  std::map<long long, Color> colors;
  std::vector<std::tuple<long long, long long, EdgeWeight>> edge_list;
  std::size_t line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string line(raw);
    std::smatch m;
    if (std::regex_match(line, m, edge_re)) {
      const bool heavy = m[4].str().find("label=\"2\"") != std::string::npos;
      edge_list.emplace_back(std::stoll(m[1]), std::stoll(m[2]), heavy ? EdgeWeight::Two : EdgeWeight::One);
    } else if (std::regex_match(line, m, node_re)) {
      const bool filled = m[3].str().find("filled") != std::string::npos;
      colors[std::stoll(m[1])] = filled ? Color::Black : Color::White;
    } else if (!std::regex_match(line, skip_re)) {
      throw InputError("DOT line " + std::to_string(line_no) + ": unsupported statement");
    }
  }

  std::map<long long, VertexId> ids;
  std::vector<Color> dense_colors;
  for (const auto& [label, color] : colors) {
    ids[label] = static_cast<VertexId>(dense_colors.size());
    dense_colors.push_back(color);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v, w] : edge_list) {
    if (!ids.contains(u) || !ids.contains(v)) throw InputError("DOT edge references an undeclared node");
    edges.push_back({ids[u], ids[v], w});
  }
  if (dense_colors.empty()) throw InputError("DOT graph has no nodes");
  return TrivalentGraph(std::move(dense_colors), edges);
}

std::vector<TrivalentGraph> parse_graph_input(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::string_view line : split_lines(text)) {
    if (!trim(line).empty()) lines.push_back(trim(line));
  }
  if (lines.empty()) throw InputError("no graph given");

  std::vector<TrivalentGraph> graphs;
  if (lines.front().front() == '{') {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      try {
        const auto record = nlohmann::json::parse(lines[i]);
        graphs.push_back(decode(record.at("canon").get<std::string>()));
      } catch (const std::exception& e) {
        throw InputError("record " + std::to_string(i + 1) + ": " + e.what());
      }
    }
    return graphs;
  }
  if (lines.front().starts_with("graph") || lines.front().starts_with("strict")) {
    graphs.push_back(parse_dot(text));
    return graphs;
  }
  if (is_bracket_string(lines.front())) {
    for (std::string_view line : lines) {
      try {
        graphs.push_back(parse_rooted_string(line));
      } catch (const DecodeError& e) {
        throw InputError(std::string(line) + ": " + e.what());
      }
    }
    return graphs;
  }
  graphs.push_back(parse_edge_list(text));
  return graphs;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate and canonicalize trivalent 2-stratifold graphs", "trivalent"};
  app.require_subcommand(1);

  std::size_t max_white = 0;
  std::string mode_name = "naive";
  std::string out_path;
  unsigned threads = 1;
  bool strict_symmetry = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Generate every graph up to N white vertices");
  enumerate_cmd->add_option("--max-white", max_white, "Largest white-vertex count")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  enumerate_cmd->add_option("--mode", mode_name, "naive or symmetry")
      ->check(CLI::IsMember({"naive", "symmetry"}));
  enumerate_cmd->add_option("--out", out_path, "Directory for catalog.jsonl and stats.csv");
  enumerate_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  enumerate_cmd->add_flag("--strict-symmetry", strict_symmetry,
                          "Reduce by symmetry at the seeds and 3-white graphs too");

  std::string in_path, text;
  auto* canon_cmd = app.add_subcommand("canon", "Print canonical strings");
  auto* canon_in = canon_cmd->add_option("--in", in_path, "Edge list, bracket strings or catalog records");
  auto* canon_str = canon_cmd->add_option("--string", text, "Inline graph (';' separates edge-list lines)");
  canon_in->excludes(canon_str);
  canon_cmd->require_option(1);

  std::string format = "dot";
  auto* decode_cmd = app.add_subcommand("decode", "Decode a canonical string");
  decode_cmd->add_option("--string", text, "Canonical string")->required();
  decode_cmd->add_option("--format", format, "dot or jsonl")->check(CLI::IsMember({"dot", "jsonl"}));

  std::size_t oracle_limit = kDefaultOracleVertexLimit;
  auto* verify_cmd = app.add_subcommand("verify", "Check the canonical form and generator up to N whites");
  verify_cmd->add_option("--max-white", max_white, "Largest white-vertex count")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  verify_cmd->add_option("--oracle-limit", oracle_limit, "Vertex bound for the brute-force oracle");
  verify_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string catalog_path;
  bool single_file = false;
  auto* export_cmd = app.add_subcommand("export", "Export a catalog as DOT files");
  export_cmd->add_option("--catalog", catalog_path, "Catalog file")->required();
  export_cmd->add_option("--format", format, "Export format")->check(CLI::IsMember({"dot"}));
  export_cmd->add_option("--out", out_path, "Output directory")->required();
  export_cmd->add_flag("--single-file", single_file, "Write one multi-graph catalog.dot");

  auto* stats_cmd = app.add_subcommand("stats", "Reprint the statistics table of a catalog");
  stats_cmd->add_option("--catalog", catalog_path, "Catalog file")->required();
  stats_cmd->add_option("--mode", mode_name, "naive or symmetry")->check(CLI::IsMember({"naive", "symmetry"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*enumerate_cmd) {
      EnumerationOptions options;
      options.mode = parse_mode(mode_name);
      options.threads = threads;
      options.exempt_seed_stage = !strict_symmetry;
      options.on_level = [&](std::size_t n, std::size_t distinct, std::size_t created) {
        err << "n=" << n << " distinct=" << distinct << " created=" << created << '\n';
      };
      const EnumerationResult result = enumerate(max_white, options);
      const std::string table = stats_table(result);
      out << table;
      if (!out_path.empty()) {
        fs::create_directories(out_path);
        std::ostringstream catalog;
        write_catalog(result, catalog);
        write_file(fs::path(out_path) / "catalog.jsonl", catalog.str());
        write_file(fs::path(out_path) / "stats.csv", table);
      }
      return kSuccess;
    }

    if (*canon_cmd) {
      const std::string input = canon_in->count() > 0 ? read_file(in_path) : [&] {
        std::string s = text;
        std::replace(s.begin(), s.end(), ';', '\n');
        return s;
      }();
      for (const TrivalentGraph& g : parse_graph_input(input)) {
        require_valid(g);
        out << encode(g).str() << '\n';
      }
      return kSuccess;
    }

    if (*decode_cmd) {
      const TrivalentGraph g = decode(text);
      if (format == "dot") {
        out << to_dot(g);
      } else {
        out << single_record(CanonicalString(text)) << '\n';
      }
      return kSuccess;
    }

    if (*verify_cmd) {
      VerifyOptions options;
      options.max_white = max_white;
      options.oracle_vertex_limit = oracle_limit;
      options.threads = threads;
      const VerifyReport report = verify_enumeration(options);
      for (const CheckResult& check : report.checks) {
        out << (check.passed() ? "PASS " : "FAIL ") << check.name << " (" << check.checked << " checks)\n";
        for (const std::string& failure : check.failures) out << "  " << failure << '\n';
      }
      return report.passed() ? kSuccess : kFailure;
    }

    if (*export_cmd) {
      const EnumerationResult catalog = load_catalog(catalog_path, EnumerationMode::Naive);
      fs::create_directories(out_path);
      std::ostringstream combined;
      for (std::size_t n : catalog.store.white_counts()) {
        for (const GraphRecord& r : catalog.store.group(n)) {
          const std::string stem = "n" + std::to_string(n) + "_" + std::to_string(r.ordinal);
          const std::string dot = to_dot(r.graph, "G_" + stem);
          if (single_file) {
            combined << dot;
          } else {
            write_file(fs::path(out_path) / (stem + ".dot"), dot);
          }
        }
      }
      if (single_file) write_file(fs::path(out_path) / "catalog.dot", combined.str());
      return kSuccess;
    }

    if (*stats_cmd) {
      out << stats_table(load_catalog(catalog_path, parse_mode(mode_name)));
      return kSuccess;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace trivalent::cli
