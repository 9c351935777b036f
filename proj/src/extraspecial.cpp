#include "comgraph/extraspecial.hpp"

#include <algorithm>
#include <string>

namespace comgraph {

namespace {

// order = p^e for prime p? (p, e), else (0, 0)
std::pair<int, int> prime_power(int n) {
    if (n < 2) return {0, 0};
    int p = 0;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {n, 1};
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return n == 1 ? std::pair{p, e} : std::pair{0, 0};
}

long long ipow(int b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

Outcome<QuotientMap> quotient_to_ortho(const Graph& x, int p, int n) {
    using Out = Outcome<QuotientMap>;
    if (x.size() != ipow(p, 2 * n + 1))
        return Out::reject("size", "vertex count is not p^(2n+1)");

    Bitset z = dominant_vertices(x);
    if (z.count() != p)
        return Out::reject("dominant",
                           "found " + std::to_string(z.count()) +
                               " dominant vertices, expected " +
                               std::to_string(p));

    TwinPartition twins =
        closed_twin_classes(x, Bitset::full(x.size()).minus(z));
    const long long want_classes = (ipow(p, 2 * n + 1) - p) / (p * (p - 1));
    if (static_cast<long long>(twins.classes.size()) != want_classes)
        return Out::reject("twins",
                           std::to_string(twins.classes.size()) +
                               " twin classes, expected " +
                               std::to_string(want_classes));
    for (const auto& cls : twins.classes)
        if (int(cls.size()) != p * p - p)
            return Out::reject("twins", "twin class of size " +
                                            std::to_string(cls.size()) +
                                            ", expected " +
                                            std::to_string(p * p - p));

    // Collapse classes, add the zero vertex, then split each class vertex
    // into p-1 mutually adjacent copies (scalar multiples are orthogonal).
    const int C = int(twins.classes.size());
    const int No = 1 + C * (p - 1);
    QuotientMap q;
    q.zero_vertex = 0;
    q.ortho_graph = Graph(No);
    q.back_map.resize(No);
    q.back_map[0] = z.to_vector();

    auto copy_vertex = [&](int cls, int k) { return 1 + cls * (p - 1) + k; };
    for (int c = 0; c < C; ++c)
        for (int k = 0; k < p - 1; ++k) {
            int o = copy_vertex(c, k);
            q.ortho_graph.add_edge(0, o);
            for (int k2 = k + 1; k2 < p - 1; ++k2)
                q.ortho_graph.add_edge(o, copy_vertex(c, k2));
            // each copy stands for one coset of the centre inside the class
            auto first = twins.classes[c].begin() + k * p;
            q.back_map[o].assign(first, first + p);
        }
    for (int c = 0; c < C; ++c)
        for (int d = c + 1; d < C; ++d)
            if (x.has_edge(twins.classes[c][0], twins.classes[d][0]))
                for (int k = 0; k < p - 1; ++k)
                    for (int k2 = 0; k2 < p - 1; ++k2)
                        q.ortho_graph.add_edge(copy_vertex(c, k),
                                               copy_vertex(d, k2));
    return Out::accept(std::move(q));
}

Outcome<std::pair<GroupTable, Labeling>> recognize_extraspecial(const Graph& x) {
    using Out = Outcome<std::pair<GroupTable, Labeling>>;
    auto [p, e] = prime_power(x.size());
    if (p == 0 || e < 3 || e % 2 == 0)
        return Out::reject("size", "vertex count " + std::to_string(x.size()) +
                                       " is not p^(2n+1) for a prime p");
    if (e == 3) return recognize_p3(x);
    if (p == 2)
        return Out::not_supported(
            "dispatch", "2-groups of order 2^(2n+1) with n >= 2 may realize "
                        "this graph; not decided here");
    const int n = (e - 1) / 2;

    auto quot = quotient_to_ortho(x, p, n);
    if (!quot) return Out{quot.verdict, std::nullopt};

    auto ortho = recognize_orthogonality_graph(quot->ortho_graph, p);
    if (!ortho)
        return Out::reject("ortho", "orthogonality recognition failed at " +
                                        ortho.verdict.stage + ": " +
                                        ortho.verdict.reason);

    // Label through the exponent-p group: the zero vertex's originals are
    // the centre z^j in ascending vertex order, and each copy's originals
    // are one coset z^j * g, where g has the copy's vector as its image in
    // the quotient.
    GroupTable g1 = make_extraspecial(p, n, 1);
    Labeling lab;
    lab.group = g1;
    lab.map.assign(x.size(), -1);
    for (int o = 0; o < quot->ortho_graph.size(); ++o) {
        const std::vector<int>& originals = quot->back_map[o];
        int base = 0;
        if (o != quot->zero_vertex) {
            const SympVector& w = ortho->map[o];
            std::vector<int> alpha(n), beta(n);
            for (int i = 0; i < n; ++i) {
                alpha[i] = w.alpha(i);
                beta[i] = w.beta(i);
            }
            base = extraspecial_index(p, n, 0, alpha, beta);
        }
        for (int j = 0; j < int(originals.size()); ++j)
            lab.map[originals[j]] = g1.mul(j /* z^j has index j */, base);
    }

    Verdict check = verify_labeling(x, lab);
    if (!check) return Out{check, std::nullopt};
    return Out::accept({std::move(g1), std::move(lab)});
}

Outcome<std::pair<GroupTable, Labeling>> recognize_p3(const Graph& x) {
    using Out = Outcome<std::pair<GroupTable, Labeling>>;
    auto [p, e] = prime_power(x.size());
    if (p == 0 || e != 3)
        return Out::reject("size", "vertex count " + std::to_string(x.size()) +
                                       " is not p^3 for a prime p");

    Bitset z = dominant_vertices(x);
    if (z.count() != p)
        return Out::reject("dominant",
                           "found " + std::to_string(z.count()) +
                               " dominant vertices, expected " +
                               std::to_string(p));

    TwinPartition twins =
        closed_twin_classes(x, Bitset::full(x.size()).minus(z));
    if (int(twins.classes.size()) != p + 1)
        return Out::reject("twins", std::to_string(twins.classes.size()) +
                                        " twin classes, expected " +
                                        std::to_string(p + 1));
    for (const auto& cls : twins.classes) {
        if (int(cls.size()) != p * p - p)
            return Out::reject("twins", "twin class of size " +
                                            std::to_string(cls.size()) +
                                            ", expected " +
                                            std::to_string(p * p - p));
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (!x.has_edge(cls[i], cls[j]))
                    return Out::reject("twins",
                                       "twin class is not a clique");
    }
    for (std::size_t c = 0; c < twins.classes.size(); ++c)
        for (std::size_t d = c + 1; d < twins.classes.size(); ++d)
            for (int u : twins.classes[c])
                for (int v : twins.classes[d])
                    if (x.has_edge(u, v))
                        return Out::reject("twins",
                                           "edge between distinct petals");

    // The sunflower is fully symmetric, so matching petals to the witness
    // group's petals in discovery order always certifies.
    GroupTable g = p == 2 ? make_dihedral(4) : make_extraspecial(p, 1, 1);
    auto [gx, natural] = build_commuting_graph(g);
    Bitset gz = dominant_vertices(gx);
    TwinPartition gtwins =
        closed_twin_classes(gx, Bitset::full(gx.size()).minus(gz));

    Labeling lab;
    lab.group = g;
    lab.map.assign(x.size(), -1);
    {
        std::vector<int> zs = z.to_vector(), gzs = gz.to_vector();
        for (std::size_t i = 0; i < zs.size(); ++i) lab.map[zs[i]] = gzs[i];
    }
    for (std::size_t c = 0; c < twins.classes.size(); ++c)
        for (std::size_t i = 0; i < twins.classes[c].size(); ++i)
            lab.map[twins.classes[c][i]] = gtwins.classes[c][i];

    Verdict check = verify_labeling(x, lab);
    if (!check) return Out{check, std::nullopt};
    return Out::accept({std::move(g), std::move(lab)});
}

}  // namespace comgraph
