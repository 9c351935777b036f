#include "comgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace comgraph {

int Bitset::count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool Bitset::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

Bitset& Bitset::operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

Bitset Bitset::operator&(const Bitset& o) const {
    Bitset r = *this;
    r &= o;
    return r;
}

Bitset Bitset::operator|(const Bitset& o) const {
    Bitset r = *this;
    r |= o;
    return r;
}

Bitset Bitset::minus(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
}

bool Bitset::intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool Bitset::contains(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (o.w_[i] & ~w_[i]) return false;
    return true;
}

int Bitset::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return int(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
}

std::vector<int> Bitset::to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
}

std::strong_ordering Bitset::operator<=>(const Bitset& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (auto c = w_[i] <=> o.w_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

void Graph::check(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::out_of_range("graph: vertex index out of range");
    if (u == v) throw std::invalid_argument("graph: self-loops not allowed");
}

void Graph::add_edge(int u, int v) {
    check(u, v);
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    check(u, v);
    adj_[u].reset(v);
    adj_[v].reset(u);
}

void Graph::toggle_edge(int u, int v) {
    if (has_edge(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

long long Graph::edge_count() const {
    long long deg = 0;
    for (int v = 0; v < n_; ++v) deg += adj_[v].count();
    return deg / 2;
}

Bitset closed_neighborhood(const Graph& g, int v) {
    Bitset r = g.neighbors(v);
    r.set(v);
    return r;
}

Bitset dominant_vertices(const Graph& g) {
    Bitset r(g.size());
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == g.size() - 1) r.set(v);
    return r;
}

TwinPartition closed_twin_classes(const Graph& g, const Bitset& s) {
    std::map<Bitset, std::vector<int>> by_key;
    s.for_each([&](int v) { by_key[closed_neighborhood(g, v)].push_back(v); });
    TwinPartition part;
    part.classes.reserve(by_key.size());
    for (auto& [key, cls] : by_key) part.classes.push_back(std::move(cls));
    std::sort(part.classes.begin(), part.classes.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return part;
}

namespace {

struct CliqueEnum {
    const Graph& g;
    std::size_t cap;
    std::vector<Bitset> out;

    void run(Bitset r, Bitset p, Bitset x) {
        if (p.none() && x.none()) {
            if (out.size() >= cap)
                throw limit_error("maximal_cliques: output cap exceeded");
            out.push_back(r);
            return;
        }
        // Pivot on the vertex of P|X with the most neighbors in P.
        int pivot = -1, best = -1;
        (p | x).for_each([&](int u) {
            int c = (p & g.neighbors(u)).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        Bitset cand = p.minus(g.neighbors(pivot));
        cand.for_each([&](int v) {
            Bitset rv = r;
            rv.set(v);
            run(rv, p & g.neighbors(v), x & g.neighbors(v));
            p.reset(v);
            x.set(v);
        });
    }
};

}  // namespace

std::vector<Bitset> maximal_cliques(const Graph& g, std::size_t cap) {
    if (g.size() > 4096)
        throw limit_error("maximal_cliques: graph too large (n > 4096)");
    CliqueEnum e{g, cap, {}};
    e.run(Bitset(g.size()), Bitset::full(g.size()), Bitset(g.size()));
    std::sort(e.out.begin(), e.out.end());
    return e.out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    Bitset seen(g.size());
    for (int v = 0; v < g.size(); ++v) {
        if (seen.test(v)) continue;
        std::vector<int> comp{v}, stack{v};
        seen.set(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.neighbors(u).minus(seen).for_each([&](int w) {
                seen.set(w);
                comp.push_back(w);
                stack.push_back(w);
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const Bitset& s) {
    std::vector<int> verts = s.to_vector();
    Graph sub(int(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j])) sub.add_edge(int(i), int(j));
    return sub;
}

Graph remove_vertices(const Graph& g, const Bitset& s) {
    return induced_subgraph(g, Bitset::full(g.size()).minus(s));
}

bool is_complete(const Graph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) != g.size() - 1) return false;
    return true;
}

Graph permute(const Graph& g, const std::vector<int>& pi) {
    if (int(pi.size()) != g.size())
        throw std::invalid_argument("permute: permutation size mismatch");
    std::vector<bool> hit(pi.size(), false);
    for (int v : pi) {
        if (v < 0 || v >= int(pi.size()) || hit[v])
            throw std::invalid_argument("permute: not a permutation");
        hit[v] = true;
    }
    Graph h(g.size());
    for (int u = 0; u < g.size(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v) h.add_edge(pi[u], pi[v]);
        });
    return h;
}

namespace {

// Iterated color refinement: color = (old color, sorted neighbor colors).
// Colors are shared between both graphs so classes are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a,
                                                            const Graph& b) {
    int n = a.size();
    std::vector<int> ca(n, 0), cb(n, 0);
    for (int it = 0; it < n; ++it) {
        std::map<std::vector<int>, int> ids;
        auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> sig{c[v]};
            g.neighbors(v).for_each([&](int u) { sig.push_back(c[u]); });
            std::sort(sig.begin() + 1, sig.end());
            return sig;
        };
        std::vector<int> na(n), nb(n);
        for (int v = 0; v < n; ++v) {
            auto s = signature(a, ca, v);
            na[v] = ids.emplace(std::move(s), int(ids.size())).first->second;
        }
        for (int v = 0; v < n; ++v) {
            auto s = signature(b, cb, v);
            nb[v] = ids.emplace(std::move(s), int(ids.size())).first->second;
        }
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> map;      // a-vertex -> b-vertex or -1
    std::vector<bool> used;    // b-vertex taken
    std::vector<int> order;    // a-vertices, rarest colors first

    bool extend(std::size_t t) {
        if (t == order.size()) return true;
        int u = order[t];
        for (int v = 0; v < b.size(); ++v) {
            if (used[v] || cb[v] != ca[u]) continue;
            bool ok = true;
            for (std::size_t s = 0; s < t && ok; ++s)
                if (a.has_edge(u, order[s]) != b.has_edge(v, map[order[s]]))
                    ok = false;
            if (!ok) continue;
            map[u] = v;
            used[v] = true;
            if (extend(t + 1)) return true;
            map[u] = -1;
            used[v] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> isomorphic(const Graph& a, const Graph& b) {
    if (a.size() > 256 || b.size() > 256)
        throw limit_error("isomorphic: graphs too large (n > 256)");
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    int n = a.size();
    auto [ca, cb] = refine_colors(a, b);

    std::vector<int> count_a(n + 1, 0), count_b(n + 1, 0);
    int classes = 0;
    for (int v = 0; v < n; ++v) {
        classes = std::max({classes, ca[v] + 1, cb[v] + 1});
        count_a[ca[v]]++;
        count_b[cb[v]]++;
    }
    for (int c = 0; c < classes; ++c)
        if (count_a[c] != count_b[c]) return std::nullopt;

    IsoSearch s{a, b, ca, cb,
                std::vector<int>(n, -1), std::vector<bool>(n, false), {}};
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
        if (count_a[ca[x]] != count_a[ca[y]])
            return count_a[ca[x]] < count_a[ca[y]];
        return x < y;
    });
    if (!s.extend(0)) return std::nullopt;
    return s.map;
}

std::vector<int> seeded_permutation(int n, std::uint64_t seed) {
    // splitmix64 steps; modulo bias is irrelevant here, determinism is not.
    std::uint64_t state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(pi[i], pi[next() % std::uint64_t(i + 1)]);
    return pi;
}

}  // namespace comgraph
