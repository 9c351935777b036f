#ifndef COMGRAPH_COMMUTING_HPP
#define COMGRAPH_COMMUTING_HPP

#include <utility>
#include <vector>

#include "comgraph/graph.hpp"
#include "comgraph/group.hpp"
#include "comgraph/verdict.hpp"

namespace comgraph {

// Bijection vertex -> group element certifying a recognition: vertices u, v
// are adjacent iff their images commute. Checked by verify_labeling.
struct Labeling {
    GroupTable group;
    std::vector<int> map;  // map[v] = element index
};

// Hypergraph of maximal abelian subgroups: the maximal cliques of a
// commuting graph, and enough to reconstruct it.
struct AbelianHypergraph {
    int n_vertices = 0;
    std::vector<std::vector<int>> hyperedges;
};

// Commuting graph of g on its element indices, edge(i, j) iff i and j
// commute, with the identity labeling.
std::pair<Graph, Labeling> build_commuting_graph(const GroupTable& g);

// Number of conjugacy classes k = (2m + n)/n of any group realizing the
// graph; rejects when the quantity is not an integer (stage "class-count").
Outcome<long long> conjugacy_count_from_graph(const Graph& x);

// Cheap necessary conditions for being a commuting graph, applied in order;
// the first failure is reported:
//   "dominant"    some vertex must be adjacent to all others
//   "class-count" (2m + n)/n must be an integer k
//   "class-bound" k >= log2 log2 n for n >= 4 (groups have that many
//                 conjugacy classes); decided exactly via 2^(2^k) vs n
//   "density"     an incomplete graph with 2m + n > 5n^2/8 exceeds the
//                 commuting-pair bound for nonabelian groups
Verdict screen(const Graph& x);

AbelianHypergraph hypergraph_from_graph(const Graph& x);
Graph graph_from_hypergraph(const AbelianHypergraph& h);

// Accepts iff map is a bijection and edge(u,v) <=> labels commute, for all
// pairs; rejects with a witness pair. Mismatched sizes or a non-bijective
// map are errors, not rejects.
Verdict verify_labeling(const Graph& x, const Labeling& lab);

}  // namespace comgraph

#endif
