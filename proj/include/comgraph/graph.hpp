#ifndef COMGRAPH_GRAPH_HPP
#define COMGRAPH_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "comgraph/verdict.hpp"

namespace comgraph {

// Fixed-universe bit set used for adjacency rows and vertex subsets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset full(int n) {
        Bitset b(n);
        for (auto& w : b.w_) w = ~0ull;
        b.trim();
        return b;
    }

    int universe() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

    int count() const;
    bool any() const;
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o);
    Bitset& operator|=(const Bitset& o);
    Bitset operator&(const Bitset& o) const;
    Bitset operator|(const Bitset& o) const;
    // Set difference: bits of *this not in o.
    Bitset minus(const Bitset& o) const;

    bool intersects(const Bitset& o) const;
    bool contains(const Bitset& o) const;  // o subset of *this

    // Lowest set bit, or -1 when empty.
    int first() const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const;

    bool operator==(const Bitset&) const = default;
    std::strong_ordering operator<=>(const Bitset& o) const;

private:
    void trim() {
        if (n_ % 64 && !w_.empty()) w_.back() &= (~0ull) >> (64 - n_ % 64);
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Simple undirected graph with bitset adjacency rows, no self-loops.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    int size() const { return n_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    long long edge_count() const;

    bool operator==(const Graph&) const = default;

private:
    void check(int u, int v) const;

    int n_ = 0;
    std::vector<Bitset> adj_;
};

// Partition of a vertex subset into classes of equal closed neighborhood.
// Classes are sorted by their lowest vertex, members ascending.
struct TwinPartition {
    std::vector<std::vector<int>> classes;
};

Bitset closed_neighborhood(const Graph& g, int v);
Bitset dominant_vertices(const Graph& g);
TwinPartition closed_twin_classes(const Graph& g, const Bitset& s);

// All maximal cliques (Bron-Kerbosch with pivoting), sorted by their vertex
// lists. Throws limit_error when the graph exceeds 4096 vertices or the
// output would exceed `cap`.
std::vector<Bitset> maximal_cliques(const Graph& g,
                                    std::size_t cap = 1'000'000);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Subgraph induced by s; vertices of s are renumbered in ascending order.
Graph induced_subgraph(const Graph& g, const Bitset& s);
Graph remove_vertices(const Graph& g, const Bitset& s);
bool is_complete(const Graph& g);

// Relabels: vertex v of g becomes pi[v] in the result.
Graph permute(const Graph& g, const std::vector<int>& pi);

// Some isomorphism g -> h (as a permutation usable with permute), or
// nullopt. Backtracking over color-refinement classes; desk scale only
// (throws limit_error above 256 vertices).
std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h);

// Deterministic pseudo-random permutation of 0..n-1 (Fisher-Yates over a
// fixed 64-bit generator, so results are stable across platforms).
std::vector<int> seeded_permutation(int n, std::uint64_t seed);

}  // namespace comgraph

#endif
