#ifndef COMGRAPH_GROUP_HPP
#define COMGRAPH_GROUP_HPP

#include <string>
#include <vector>

#include "comgraph/verdict.hpp"

namespace comgraph {

// A finite group as an order-n multiplication table. The identity always
// sits at index 0; every constructor and the JSON loader normalize to that.
struct GroupTable {
    int order = 0;
    std::vector<int> table;           // row-major, table[a*order + b]
    std::vector<std::string> names;   // optional, size 0 or order

    int mul(int a, int b) const { return table[a * order + b]; }
    int& at(int a, int b) { return table[a * order + b]; }

    int inverse(int a) const;
    int element_order(int a) const;
    bool commutes(int a, int b) const { return mul(a, b) == mul(b, a); }
};

struct ConjugacyPartition {
    std::vector<std::vector<int>> classes;  // sorted by lowest member
};

// Checks identity-at-0, Latin-square rows/columns and associativity.
// The associativity sweep is O(n^3); it runs by default only for n <= 512
// and can be forced above that with force_associativity.
Verdict validate_table(const GroupTable& t, bool force_associativity = false);

GroupTable make_cyclic(int n);

// Dihedral group of order 2m with a^2 = 1, b^m = 1, a b a^-1 = b^-1.
// Elements in order 1, b, ..., b^(m-1), a, ab, ..., ab^(m-1).
GroupTable make_dihedral(int m);

// Extraspecial group of order p^(2n+1), p an odd prime. Generators
// z (central), x_i, y_i with [x_i, y_i] = z and all other pairs commuting;
// variant 1 has x_i^p = y_i^p = z^p = 1, variant 2 has y_i^p = z instead.
// Elements are tuples (j; a_1..a_n; b_1..b_n) for z^j prod x_i^{a_i} y_i^{b_i},
// encoded by extraspecial_index below.
GroupTable make_extraspecial(int p, int n, int variant);

// Index of the tuple (j; alpha; beta) in make_extraspecial's element order:
// base-p digits with j least significant, then alpha_1..alpha_n, then
// beta_1..beta_n. In particular z^j has index j, x_i has index p^i and
// y_i has index p^(n+i).
int extraspecial_index(int p, int n, int j, const std::vector<int>& alpha,
                       const std::vector<int>& beta);

// C_q x| C_k with the generator of C_k acting by x -> x^r on C_q.
// Requires r^k = 1 (mod q) and gcd(r, q) = 1. Element (i, j) = x^i y^j
// has index i*k + j.
GroupTable make_semidirect_cyclic(int q, int k, int r);

// Direct product on pairs, index(a, b) = a*|h| + b.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

std::vector<int> center(const GroupTable& g);
std::vector<int> centralizer(const GroupTable& g, int x);
ConjugacyPartition conjugacy_classes(const GroupTable& g);

// Maximal abelian subgroups, computed as the maximal cliques of the
// commuting relation (maximal commuting subsets are closed under
// multiplication). Desk-scale oracle: throws limit_error for n > 512.
std::vector<std::vector<int>> maximal_abelian_subgroups(const GroupTable& g);

bool is_prime_number(long long n);

}  // namespace comgraph

#endif
