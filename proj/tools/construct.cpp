#include "construct.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "graphprof/constructions.hpp"
#include "graphprof/errors.hpp"

namespace graphprof::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw input_error("bad " + what + " '" + s + "' in construction spec");
  }
}

double parse_real(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw input_error("bad " + what + " '" + s + "' in construction spec");
  }
}

Graph petersen() {
  // outer 5-cycle, inner 5-cycle with stride 2, spokes
  std::vector<VertexPair> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph::from_edges(10, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw input_error("cycle needs n >= 3");
  std::vector<VertexPair> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw input_error("path needs n >= 1");
  std::vector<VertexPair> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

}  // namespace

std::uint64_t fnv1a(const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

ResolvedInput build_construction(const std::string& spec) {
  auto parts = split(spec, ':');
  const std::string& family = parts[0];
  std::size_t args = parts.size() - 1;
  auto want = [&](std::size_t k) {
    if (args != k)
      throw input_error("construction '" + family + "' wants " + std::to_string(k) +
                        " argument(s), got " + std::to_string(args));
  };

  ResolvedInput out;
  out.source = "construct:" + spec;
  out.description = spec;
  out.checksum = fnv1a(spec.data(), spec.size());
  out.byte_size = spec.size();

  if (family == "complete") {
    want(1);
    int n = static_cast<int>(parse_int(parts[1], "order"));
    out.object = clique_union(CliqueSpec::make({1.0}), n);
  } else if (family == "empty") {
    want(1);
    int n = static_cast<int>(parse_int(parts[1], "order"));
    out.object = Graph::from_edges(n, {});
  } else if (family == "cycle") {
    want(1);
    out.object = cycle_graph(static_cast<int>(parse_int(parts[1], "order")));
  } else if (family == "path") {
    want(1);
    out.object = path_graph(static_cast<int>(parse_int(parts[1], "order")));
  } else if (family == "petersen") {
    want(0);
    out.object = petersen();
  } else if (family == "clique-union") {
    want(2);
    std::vector<double> alphas;
    for (const std::string& a : split(parts[1], ','))
      alphas.push_back(parse_real(a, "clique share"));
    int n = static_cast<int>(parse_int(parts[2], "order"));
    out.object = clique_union(CliqueSpec::make(std::move(alphas)), n);
  } else if (family == "extremal-rho") {
    want(1);
    out.object = extremal_rho_graph(static_cast<int>(parse_int(parts[1], "order")));
  } else if (family == "tyomkyn") {
    want(1);
    out.object = tyomkyn_graph(static_cast<int>(parse_int(parts[1], "depth")));
  } else if (family == "random-graph") {
    want(3);
    int n = static_cast<int>(parse_int(parts[1], "order"));
    double p = parse_real(parts[2], "probability");
    std::uint64_t seed = static_cast<std::uint64_t>(parse_int(parts[3], "seed"));
    out.object = random_graph(n, p, seed);
    out.seed = seed;
  } else if (family == "circular") {
    want(1);
    out.object = circular_tournament(static_cast<int>(parse_int(parts[1], "order")));
  } else if (family == "transitive") {
    want(1);
    out.object = transitive_tournament(static_cast<int>(parse_int(parts[1], "order")));
  } else if (family == "random-tournament") {
    want(2);
    int n = static_cast<int>(parse_int(parts[1], "order"));
    std::uint64_t seed = static_cast<std::uint64_t>(parse_int(parts[2], "seed"));
    out.object = random_tournament(n, seed);
    out.seed = seed;
  } else {
    throw input_error("unknown construction family '" + family + "'");
  }
  return out;
}

ResolvedInput resolve_input(const std::string& input_path, const std::string& construct,
                            const std::string& spec_file) {
  int given = !input_path.empty() + !construct.empty() + !spec_file.empty();
  if (given != 1)
    throw input_error("give exactly one of --input, --construct, --spec");
  if (!construct.empty()) return build_construction(construct);
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw input_error("cannot open spec file '" + spec_file + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw input_error("bad JSON in '" + spec_file + "': " + e.what());
    }
    if (j.contains("construct") && j["construct"].is_string())
      return build_construction(j["construct"].get<std::string>());
    if (j.contains("input") && j["input"].is_string())
      return resolve_input(j["input"].get<std::string>(), "", "");
    throw input_error("spec file needs a 'construct' or 'input' string field");
  }
  std::ifstream in(input_path, std::ios::binary);
  if (!in) throw input_error("cannot open input file '" + input_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  std::istringstream stream(bytes);
  ResolvedInput out;
  out.object = read_object(stream, input_path);
  out.source = "file:" + input_path;
  out.description = input_path;
  out.checksum = fnv1a(bytes.data(), bytes.size());
  out.byte_size = bytes.size();
  return out;
}

std::string object_kind(const ResolvedInput& in, const std::string& expected) {
  std::string kind = std::holds_alternative<Graph>(in.object) ? "graph" : "tournament";
  if (!expected.empty() && expected != kind)
    throw input_error("input is a " + kind + " but --kind says " + expected);
  return kind;
}

}  // namespace graphprof::cli
