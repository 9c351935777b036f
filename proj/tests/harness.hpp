#ifndef COMGRAPH_TESTS_HARNESS_HPP
#define COMGRAPH_TESTS_HARNESS_HPP

#include <string>
#include <vector>

#include "comgraph/graph.hpp"
#include "comgraph/group.hpp"

// Test-data generation and brute-force oracles. The oracles recompute
// everything at definition level (triple loops, subset closure) on purpose:
// they share nothing with the library paths they check.
namespace comgraph::harness {

GroupTable make_quaternion8();
// Alternating group on m points (m <= 5), even permutations in
// lexicographic order; the identity comes first.
GroupTable make_alternating(int m);

struct CorpusEntry {
    std::string name;
    GroupTable group;
};

// The generated group corpus: cyclic up to 32, the small dihedrals, Q8, A4,
// extraspecial groups up to order 3125, fixed-point-free semidirect
// products, and a spread of direct products of total order <= 256.
const std::vector<CorpusEntry>& corpus();

// Independent oracles (|g| <= 512 unless noted).
long long oracle_conjugacy_count(const GroupTable& g);
std::vector<std::vector<int>> oracle_max_abelian(const GroupTable& g);
std::vector<std::vector<bool>> oracle_commute_graph(const GroupTable& g);

// Fixed non-commuting-graph fixtures, each with the recognizer expected to
// reject it ("screen" or "extraspecial") and the expected failing stage.
struct NegativeInstance {
    std::string name;
    Graph graph;
    std::string recognizer;
    std::string stage;
};
std::vector<NegativeInstance> negative_instances();

// small graph builders shared across tests
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph matching_graph(int pairs);
Graph petersen_graph();
// G(n, 1/2) with a deterministic generator
Graph random_graph(int n, std::uint64_t seed);

}  // namespace comgraph::harness

#endif
