#ifndef COMGRAPH_IO_HPP
#define COMGRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "comgraph/commuting.hpp"
#include "comgraph/graph.hpp"
#include "comgraph/group.hpp"
#include "comgraph/symplectic.hpp"

namespace comgraph {

// Group JSON: {"order": n, "names": [... optional ...], "table": [[...]]}.
// The loader validates the table and insists on the identity at index 0.
GroupTable read_group_json(std::istream& in);
GroupTable read_group_file(const std::string& path);
void write_group_json(std::ostream& out, const GroupTable& g);
void write_group_file(const std::string& path, const GroupTable& g);

// Edge list: first line "n m", then m lines "u v" with 0 <= u < v < n,
// ascending lexicographic on output. Rejects duplicates, self-loops and
// out-of-range indices.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// Labeling JSON: {"group_file": <path or inline group>, "map": [...]}.
// Inline groups are written on output; both forms are accepted on input
// (paths are resolved relative to the working directory).
Labeling read_labeling_json(std::istream& in);
Labeling read_labeling_file(const std::string& path);
void write_labeling_json(std::ostream& out, const Labeling& lab);
void write_labeling_file(const std::string& path, const Labeling& lab);

// Orthogonality labeling JSON: {"p": p, "n": n, "map": [[2n coords], ...]}.
OrthoLabeling read_ortho_labeling_json(std::istream& in);
void write_ortho_labeling_json(std::ostream& out, const OrthoLabeling& lab);
void write_ortho_labeling_file(const std::string& path,
                               const OrthoLabeling& lab);

}  // namespace comgraph

#endif
