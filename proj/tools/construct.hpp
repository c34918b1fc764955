#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "graphprof/io.hpp"

namespace graphprof::cli {

// A resolved input object plus provenance for the run report.
struct ResolvedInput {
  GraphOrTournament object;
  std::string source;            // "file:<path>" or "construct:<spec>"
  std::string description;       // echo of the construction or file path
  std::uint64_t checksum = 0;    // FNV-1a over file bytes or the spec string
  std::uint64_t byte_size = 0;   // file size; spec length for constructions
  std::optional<std::uint64_t> seed;  // set when the construction is seeded
};

// Construction mini-language, one family per spec string:
//   complete:<n>            empty:<n>             cycle:<n>
//   path:<n>                petersen              clique-union:<a1,a2,..>:<n>
//   extremal-rho:<n>        tyomkyn:<k>           random-graph:<n>:<p>:<seed>
//   circular:<n>            transitive:<n>        random-tournament:<n>:<seed>
ResolvedInput build_construction(const std::string& spec);

// --input file, --construct spec, --spec json-file (exactly one non-empty).
// The JSON escape hatch mirrors the flag: {"construct": "<spec>"} or
// {"input": "<path>"}.
ResolvedInput resolve_input(const std::string& input_path, const std::string& construct,
                            const std::string& spec_file);

// "graph" or "tournament" of the resolved object; throws input_error if
// `expected` is non-empty and disagrees.
std::string object_kind(const ResolvedInput& in, const std::string& expected);

std::uint64_t fnv1a(const void* data, std::size_t len);

}  // namespace graphprof::cli
