#ifndef COMGRAPH_EXTRASPECIAL_HPP
#define COMGRAPH_EXTRASPECIAL_HPP

#include <utility>
#include <vector>

#include "comgraph/commuting.hpp"
#include "comgraph/graph.hpp"
#include "comgraph/group.hpp"
#include "comgraph/symplectic.hpp"
#include "comgraph/verdict.hpp"

namespace comgraph {

// The orthogonality graph derived from a candidate commuting graph by
// collapsing closed-twin classes, adding a zero vertex for the centre, and
// splitting each class vertex into p-1 mutually adjacent scalar copies.
// back_map[o] lists the original vertices an orthogonality vertex stands
// for: the p dominant vertices for the zero vertex, p vertices of the
// class for each copy.
struct QuotientMap {
    Graph ortho_graph;
    std::vector<std::vector<int>> back_map;
    int zero_vertex = 0;
};

// Structural screens plus the collapse/split construction. |x| must be
// p^(2n+1); rejects unless there are exactly p dominant vertices and the
// remaining vertices fall into (p^(2n+1) - p)/(p^2 - p) closed-twin classes
// of size p^2 - p each.
Outcome<QuotientMap> quotient_to_ortho(const Graph& x, int p, int n);

// Decides whether x is the commuting graph of an extraspecial group.
// Derives p and n from |x| = p^(2n+1); |x| = p^3 is delegated to
// recognize_p3 (which also covers p = 2), while p = 2 with n >= 2 returns
// unsupported. On accept the labeling maps into the exponent-p group
// make_extraspecial(p, n, 1) and has passed verify_labeling.
Outcome<std::pair<GroupTable, Labeling>> recognize_extraspecial(const Graph& x);

// Order-p^3 recognizer: p dominant vertices plus p+1 closed-twin classes of
// size p^2 - p, each a clique, with no edges across classes. Certified
// witness group: make_extraspecial(p, 1, 1) for odd p, the dihedral group
// of order 8 for p = 2.
Outcome<std::pair<GroupTable, Labeling>> recognize_p3(const Graph& x);

}  // namespace comgraph

#endif
