#include "comgraph/frobenius.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace comgraph {

Outcome<FrobeniusCertificate> recognize_frobenius(const Graph& x, int n,
                                                  int k) {
    using Out = Outcome<FrobeniusCertificate>;
    if (n <= 1 || k <= 1)
        throw std::invalid_argument("recognize_frobenius: need n, k > 1");
    if (std::gcd(n, k) != 1)
        throw std::invalid_argument("recognize_frobenius: gcd(n, k) != 1");
    if (x.size() != n * k)
        throw std::invalid_argument("recognize_frobenius: |x| != n*k");

    Bitset dom = dominant_vertices(x);
    if (dom.count() != 1)
        return Out::reject("dominant",
                           std::to_string(dom.count()) +
                               " dominant vertices, expected exactly 1");
    const int v = dom.first();

    // components of x minus the dominant vertex, in original vertex ids
    Bitset keep = Bitset::full(x.size());
    keep.reset(v);
    Graph rest = induced_subgraph(x, keep);
    std::vector<int> ids = keep.to_vector();
    std::vector<std::vector<int>> comps = connected_components(rest);
    for (auto& comp : comps)
        for (int& u : comp) u = ids[u];

    std::vector<std::vector<int>> kernel, complements;
    for (auto& comp : comps) {
        if (int(comp.size()) == n - 1)
            kernel.push_back(comp);
        else if (int(comp.size()) == k - 1)
            complements.push_back(comp);
        else
            return Out::reject("components",
                               "component of size " +
                                   std::to_string(comp.size()) +
                                   " fits neither n-1 nor k-1");
    }
    if (kernel.size() != 1 || int(complements.size()) != n)
        return Out::reject(
            "components", "found " + std::to_string(kernel.size()) +
                              " kernel-sized and " +
                              std::to_string(complements.size()) +
                              " complement-sized components, expected 1 and " +
                              std::to_string(n));

    // every component needs a vertex dominant within it
    auto comp_dominant = [&](const std::vector<int>& comp) {
        for (int u : comp) {
            bool all = true;
            for (int w : comp)
                if (w != u && !x.has_edge(u, w)) {
                    all = false;
                    break;
                }
            if (all) return u;
        }
        return -1;
    };

    FrobeniusCertificate cert;
    cert.n = n;
    cert.k = k;
    cert.dominant_vertex = v;
    cert.kernel_component = kernel[0];
    cert.complement_components = complements;
    int d = comp_dominant(kernel[0]);
    if (d < 0)
        return Out::reject("component-dominant",
                           "kernel component has no dominant vertex");
    cert.component_dominants.push_back(d);
    for (const auto& comp : complements) {
        d = comp_dominant(comp);
        if (d < 0)
            return Out::reject("component-dominant",
                               "a complement component has no dominant vertex");
        cert.component_dominants.push_back(d);
    }
    return Out::accept(std::move(cert));
}

std::vector<std::pair<int, int>> frobenius_splits(const Graph& x) {
    if (x.size() < 4)
        throw std::invalid_argument("frobenius_splits: |x| >= 4 required");
    std::vector<std::pair<int, int>> found;
    const int N = x.size();
    for (int n = 2; n < N; ++n) {
        if (N % n != 0) continue;
        int k = N / n;
        if (k <= 1 || std::gcd(n, k) != 1) continue;
        if (recognize_frobenius(x, n, k)) found.emplace_back(n, k);
    }
    return found;
}

Outcome<std::pair<GroupTable, Labeling>> recognize_dihedral_odd(const Graph& x) {
    using Out = Outcome<std::pair<GroupTable, Labeling>>;
    if (x.size() < 6 || x.size() % 2 != 0 || (x.size() / 2) % 2 == 0)
        throw std::invalid_argument(
            "recognize_dihedral_odd: |x| must be 2m with m odd >= 3");
    const int m = x.size() / 2;

    Bitset dom = dominant_vertices(x);
    if (dom.count() != 1)
        return Out::reject("dominant",
                           std::to_string(dom.count()) +
                               " dominant vertices, expected exactly 1");
    const int v = dom.first();

    std::vector<int> pendants, clique;
    for (int u = 0; u < x.size(); ++u) {
        if (u == v) continue;
        if (x.degree(u) == 1)
            pendants.push_back(u);  // necessarily attached to v
        else
            clique.push_back(u);
    }
    if (int(pendants.size()) != m)
        return Out::reject("pendants", std::to_string(pendants.size()) +
                                           " pendant vertices, expected " +
                                           std::to_string(m));
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!x.has_edge(clique[i], clique[j]))
                return Out::reject("clique",
                                   "rotation vertices do not form a clique");

    // rotations onto the clique (any order certifies: <b> is abelian),
    // reflections onto the pendants
    GroupTable g = make_dihedral(m);
    Labeling lab;
    lab.group = g;
    lab.map.assign(x.size(), -1);
    lab.map[v] = 0;
    for (std::size_t i = 0; i < clique.size(); ++i)
        lab.map[clique[i]] = int(i) + 1;
    for (std::size_t i = 0; i < pendants.size(); ++i)
        lab.map[pendants[i]] = m + int(i);

    Verdict check = verify_labeling(x, lab);
    if (!check) return Out{check, std::nullopt};
    return Out::accept({std::move(g), std::move(lab)});
}

}  // namespace comgraph
