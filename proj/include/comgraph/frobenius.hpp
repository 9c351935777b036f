#ifndef COMGRAPH_FROBENIUS_HPP
#define COMGRAPH_FROBENIUS_HPP

#include <utility>
#include <vector>

#include "comgraph/commuting.hpp"
#include "comgraph/graph.hpp"
#include "comgraph/group.hpp"
#include "comgraph/verdict.hpp"

namespace comgraph {

// Structural witness that a graph satisfies the Frobenius criterion for a
// kernel of order n and complement of order k: one dominant vertex whose
// removal leaves one component of size n-1 (the kernel) and n components of
// size k-1 (the complements), each with its own internally dominant vertex.
struct FrobeniusCertificate {
    int n = 0;
    int k = 0;
    int dominant_vertex = -1;
    std::vector<int> kernel_component;
    std::vector<std::vector<int>> complement_components;
    std::vector<int> component_dominants;  // kernel's first, then complements'
};

// Decides the criterion for the split (n, k). Preconditions |x| = n*k,
// n, k > 1, gcd(n, k) = 1 are the caller's duty and violations throw;
// structural failures reject with the failed condition.
Outcome<FrobeniusCertificate> recognize_frobenius(const Graph& x, int n, int k);

// All coprime factorizations |x| = n*k with n, k > 1 accepted by the
// criterion. Requires |x| >= 4.
std::vector<std::pair<int, int>> frobenius_splits(const Graph& x);

// Odd dihedral recognizer: |x| = 2m with m odd >= 3 (violations throw).
// Accepts iff there is one dominant vertex, m pendant vertices hanging off
// it, and an m-clique through it; returns a certified labeling by the
// dihedral group of order 2m.
Outcome<std::pair<GroupTable, Labeling>> recognize_dihedral_odd(const Graph& x);

}  // namespace comgraph

#endif
