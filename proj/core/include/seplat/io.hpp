#ifndef SEPLAT_IO_HPP
#define SEPLAT_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "seplat/graph.hpp"
#include "seplat/lattice.hpp"
#include "seplat/markov.hpp"

namespace seplat::io {

// The interchange unit of the command-line tool.
struct GraphDocument {
  std::string kind = "abstract";  // "abstract" | "diamond" | "box"
  MixedGraph graph;
  std::optional<lattice::Window> window;

  bool is_lattice() const { return kind != "abstract"; }
  lattice::CellKind cell_kind() const;  // throws InvalidQuery for abstract graphs
};

GraphDocument lattice_document(lattice::CellKind kind, const lattice::Window& w);

// {"bidirected": [[u,v]...], "directed": [[u,v]...], "kind": ..., "vertices": [...],
//  "window": {...}}; arrays sorted, two-space indent, trailing newline.
std::string to_json(const GraphDocument& doc);
GraphDocument graph_from_json(std::string_view text);

// Byte-stable DOT: sorted vertices, then directed edges, then bidirected
// edges as `u -> v [dir=both]` with the smaller label first.
std::string to_dot(const MixedGraph& g);

// {"v": {"parents": [...], "p1": {"<bit of parent 0><bit of parent 1>...": p}}}
std::string cpts_to_json(const markov::CptSet& cpts);
markov::CptSet cpts_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace seplat::io

#endif  // SEPLAT_IO_HPP
