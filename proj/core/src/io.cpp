#include "graphprof/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "graphprof/errors.hpp"

namespace graphprof {

namespace {

[[noreturn]] void fail(const std::string& source, long line, const std::string& msg) {
  throw input_error(source + ":" + std::to_string(line) + ": " + msg);
}

bool parse_pair(const std::string& text, int& u, int& v) {
  std::istringstream ss(text);
  if (!(ss >> u >> v)) return false;
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

}  // namespace

GraphOrTournament read_object(std::istream& in, const std::string& source) {
  std::string header;
  long lineno = 0;
  while (std::getline(in, header)) {
    ++lineno;
    if (!header.empty() && header[0] != '#') break;
    header.clear();
  }
  std::istringstream hs(header);
  std::string kind;
  long long n_ll = -1;
  if (!(hs >> kind >> n_ll) || (kind != "graph" && kind != "tournament") || n_ll < 0)
    fail(source, lineno, "expected header 'graph <n>' or 'tournament <n>'");
  int n = static_cast<int>(n_ll);

  std::vector<VertexPair> pairs;
  std::string line;
  bool matrix_mode = false;
  long first_matrix_line = 0;
  std::vector<std::string> matrix_rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (kind == "tournament" && !matrix_mode && line == "matrix" && pairs.empty()) {
      matrix_mode = true;
      first_matrix_line = lineno;
      continue;
    }
    if (matrix_mode) {
      matrix_rows.push_back(line);
      continue;
    }
    int u, v;
    if (!parse_pair(line, u, v)) fail(source, lineno, "expected two integers, got '" + line + "'");
    pairs.emplace_back(u, v);
  }

  try {
    if (kind == "graph") return Graph::from_edges(n, pairs);
    if (matrix_mode) {
      if (matrix_rows.size() != static_cast<std::size_t>(n))
        fail(source, first_matrix_line,
             "matrix block has " + std::to_string(matrix_rows.size()) + " rows, expected " +
                 std::to_string(n));
      std::vector<Bitset> rows(n, Bitset(n));
      for (int v = 0; v < n; ++v) {
        const std::string& r = matrix_rows[v];
        if (r.size() != static_cast<std::size_t>(n))
          fail(source, first_matrix_line + 1 + v, "matrix row has wrong length");
        for (int u = 0; u < n; ++u) {
          if (r[u] == '1')
            rows[v].set(u);
          else if (r[u] != '0')
            fail(source, first_matrix_line + 1 + v, "matrix entries must be 0 or 1");
        }
      }
      return Tournament::from_rows(std::move(rows));
    }
    return Tournament::from_arcs(n, pairs);
  } catch (const input_error& e) {
    throw input_error(source + ": " + e.what());
  }
}

GraphOrTournament read_object_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open input file '" + path + "'");
  return read_object(in, path);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.order() << "\n";
  for (int u = 0; u < g.order(); ++u)
    for (std::size_t v = g.neighbors(u).next_set(u + 1); v != Bitset::npos;
         v = g.neighbors(u).next_set(v + 1))
      out << u << " " << v << "\n";
}

void write_tournament(std::ostream& out, const Tournament& t, bool matrix) {
  out << "tournament " << t.order() << "\n";
  if (matrix) {
    out << "matrix\n";
    for (int v = 0; v < t.order(); ++v) {
      std::string row(t.order(), '0');
      t.out_set(v).for_each_set([&](std::size_t u) { row[u] = '1'; });
      out << row << "\n";
    }
    return;
  }
  for (int u = 0; u < t.order(); ++u)
    for (int v = u + 1; v < t.order(); ++v)
      if (t.beats(u, v))
        out << u << " " << v << "\n";
      else
        out << v << " " << u << "\n";
}

}  // namespace graphprof
