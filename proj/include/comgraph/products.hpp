#ifndef COMGRAPH_PRODUCTS_HPP
#define COMGRAPH_PRODUCTS_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "comgraph/commuting.hpp"
#include "comgraph/graph.hpp"
#include "comgraph/group.hpp"
#include "comgraph/verdict.hpp"

namespace comgraph {

// Strong product: vertex (u, v) gets index u*|b| + v; distinct pairs are
// adjacent iff each coordinate is equal or adjacent.
Graph strong_product(const Graph& a, const Graph& b);

// Complete prime factorization under the strong product, found by
// exponential backtracking (desk scale, default vertex limit 64).
// iso[v] is v's index in the strong product of `factors` taken in order;
// permuting that product by the inverse of iso reproduces the input
// bit-exactly.
struct Factorization {
    std::vector<Graph> factors;
    std::vector<int> iso;
};

// Requires a connected graph with 2 <= |x| <= limit.
Factorization factor_strong(const Graph& x, int limit = 64);

bool is_prime_strong(const Graph& x, int limit = 64);

// Recognizer for a single indecomposable-candidate graph: a certified group
// and labeling, or nullopt.
using RecognizerOracle = std::function<
    std::optional<std::pair<GroupTable, Labeling>>(const Graph&)>;

// Dynamic program over subsets of prime factors: a subset is realized when
// the oracle recognizes its product graph or when it splits into two
// disjoint realized subsets (then the groups multiply). Accepts iff the
// full factor set is realized; the final labeling is re-verified against x.
Outcome<std::pair<GroupTable, Labeling>> product_reduction(
    const Graph& x, const RecognizerOracle& recognize, int limit = 64);

// Built-in oracles by name: "complete" (any complete graph, cyclic
// witness), "extraspecial", "p3", "dihedral-odd". Throws on unknown names.
RecognizerOracle named_recognizer(const std::string& name);

// Union of several named oracles, tried in order.
RecognizerOracle combined_recognizer(const std::vector<std::string>& names);

}  // namespace comgraph

#endif
