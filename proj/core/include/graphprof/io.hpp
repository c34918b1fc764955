#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "graphprof/graph.hpp"

namespace graphprof {

using GraphOrTournament = std::variant<Graph, Tournament>;

// Text formats:
//   graph <n>        followed by one "u v" edge per line (0-based)
//   tournament <n>   followed by one "u v" arc per line for all C(n,2) pairs,
//                    or by a line "matrix" and n rows of n chars in {0,1}
//                    where row v, column u is 1 iff v beats u.
// Parse failures raise input_error naming the line.
GraphOrTournament read_object(std::istream& in, const std::string& source_name);
GraphOrTournament read_object_file(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void write_tournament(std::ostream& out, const Tournament& t, bool matrix = false);

}  // namespace graphprof
