#include "comgraph/commuting.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace comgraph {

std::pair<Graph, Labeling> build_commuting_graph(const GroupTable& g) {
    Graph x(g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.commutes(a, b)) x.add_edge(a, b);
    Labeling lab;
    lab.group = g;
    lab.map.resize(g.order);
    std::iota(lab.map.begin(), lab.map.end(), 0);
    return {std::move(x), std::move(lab)};
}

Outcome<long long> conjugacy_count_from_graph(const Graph& x) {
    const long long n = x.size();
    if (n < 1)
        throw std::invalid_argument("conjugacy_count_from_graph: empty graph");
    const long long m = x.edge_count();
    if ((2 * m + n) % n != 0)
        return Outcome<long long>::reject(
            "class-count", "(2m+n)/n = " + std::to_string(2 * m + n) + "/" +
                               std::to_string(n) + " is not an integer");
    return Outcome<long long>::accept((2 * m + n) / n);
}

Verdict screen(const Graph& x) {
    const long long n = x.size();
    if (n < 1) throw std::invalid_argument("screen: empty graph");

    if (dominant_vertices(x).none())
        return Verdict::rejected("dominant", "no dominant vertex");

    auto kc = conjugacy_count_from_graph(x);
    if (!kc) return kc.verdict;
    const long long k = *kc;

    if (n >= 4) {
        // k < log2 log2 n  <=>  2^(2^k) < n, settled in integers.
        bool below = false;
        if (k < 6) {
            long long tower = 1ll << (1ll << k);
            below = tower < n;
        }
        if (below)
            return Verdict::rejected(
                "class-bound", "class count k=" + std::to_string(k) +
                                   " is below log2 log2 " + std::to_string(n));
    }

    const long long m = x.edge_count();
    if (!is_complete(x) && 8 * (2 * m + n) > 5 * n * n)
        return Verdict::rejected(
            "density", "incomplete graph with 2m+n = " +
                           std::to_string(2 * m + n) + " > 5n^2/8");
    return Verdict::accepted();
}

AbelianHypergraph hypergraph_from_graph(const Graph& x) {
    AbelianHypergraph h;
    h.n_vertices = x.size();
    for (const Bitset& c : maximal_cliques(x))
        h.hyperedges.push_back(c.to_vector());
    return h;
}

Graph graph_from_hypergraph(const AbelianHypergraph& h) {
    Graph x(h.n_vertices);
    for (const auto& edge : h.hyperedges)
        for (std::size_t i = 0; i < edge.size(); ++i)
            for (std::size_t j = i + 1; j < edge.size(); ++j)
                if (!x.has_edge(edge[i], edge[j]))
                    x.add_edge(edge[i], edge[j]);
    return x;
}

Verdict verify_labeling(const Graph& x, const Labeling& lab) {
    const int n = x.size();
    if (lab.group.order != n || int(lab.map.size()) != n)
        throw std::invalid_argument("verify_labeling: size mismatch");
    std::vector<bool> hit(n, false);
    for (int e : lab.map) {
        if (e < 0 || e >= n || hit[e])
            throw std::invalid_argument("verify_labeling: map is not a bijection");
        hit[e] = true;
    }
    // Compare x's rows against the commuting rows of the labeled elements.
    for (int a = 0; a < n; ++a) {
        Bitset row(n);
        for (int b = 0; b < n; ++b)
            if (b != a && lab.group.commutes(lab.map[a], lab.map[b]))
                row.set(b);
        if (!(row == x.neighbors(a))) {
            Bitset diff =
                row.minus(x.neighbors(a)) | x.neighbors(a).minus(row);
            int b = diff.first();
            return Verdict::rejected(
                "verify", "edge/commutation mismatch at pair (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
    return Verdict::accepted();
}

}  // namespace comgraph
