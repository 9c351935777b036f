#include "comgraph/products.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "comgraph/extraspecial.hpp"
#include "comgraph/frobenius.hpp"

namespace comgraph {

Graph strong_product(const Graph& a, const Graph& b) {
    long long size = (long long)a.size() * b.size();
    if (size > 1 << 20) throw limit_error("strong_product: result too large");
    Graph x(static_cast<int>(size));
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < b.size(); ++v)
            for (int u2 = u; u2 < a.size(); ++u2) {
                bool ua = u2 != u && a.has_edge(u, u2);
                for (int v2 = 0; v2 < b.size(); ++v2) {
                    if (u2 == u && v2 <= v) continue;
                    bool vb = v2 != v && b.has_edge(v, v2);
                    bool adjacent = (u == u2 && vb) || (v == v2 && ua) ||
                                    (ua && vb);
                    if (adjacent)
                        x.add_edge(u * b.size() + v, u2 * b.size() + v2);
                }
            }
    return x;
}

namespace {

// Backtracking search for x = A (x) B with |A| = da, |B| = db: assign each
// vertex a grid cell, deriving factor adjacencies from the strong-product
// clauses as constraints accumulate. Closed neighborhoods multiply in a
// strong product, so |N[v] cap N[w]| = cnA(i,i') * cnB(j,j'); these integer
// products are the workhorse pruning constraints.
struct SplitSearch {
    const Graph& x;
    const int da, db;
    std::vector<int> cnx;           // |N[v] cap N[w]| in x
    std::vector<std::int8_t> A, B;  // tri-state adjacency, -1 unknown
    std::vector<int> cnA, cnB;      // fiber intersection sizes, -1 unknown
    std::vector<int> ci, cj;        // per-vertex coordinates, -1 unassigned
    std::vector<int> grid;          // grid[i*db + j] = vertex or -1
    std::vector<int> order;         // assignment order (BFS, connected)
    std::vector<int> assigned;
    int max_i = 0, max_j = 0;
    bool failed = false;

    struct PendingEdge {  // not (A(a) and B(b)), from a non-edge of x
        int a, b;
    };
    struct PendingCn {  // cnA[a] * cnB[b] = c
        int a, b, c;
    };
    std::vector<PendingEdge> pending_edge;
    std::vector<PendingCn> pending_cn;

    enum class TrailOp { set_a, set_b, set_cna, set_cnb, pop_edge, pop_cn };
    std::vector<std::pair<TrailOp, int>> trail;

    SplitSearch(const Graph& g, int da_, int db_)
        : x(g),
          da(da_),
          db(db_),
          cnx(std::size_t(g.size()) * g.size()),
          A(std::size_t(da_) * da_, -1),
          B(std::size_t(db_) * db_, -1),
          cnA(std::size_t(da_) * da_, -1),
          cnB(std::size_t(db_) * db_, -1),
          ci(g.size(), -1),
          cj(g.size(), -1),
          grid(std::size_t(da_) * db_, -1) {
        for (int v = 0; v < g.size(); ++v) {
            Bitset nv = closed_neighborhood(g, v);
            for (int w = v; w < g.size(); ++w)
                cnx[std::size_t(v) * g.size() + w] =
                    cnx[std::size_t(w) * g.size() + v] =
                        (nv & closed_neighborhood(g, w)).count();
        }
        Bitset seen(g.size());
        std::vector<int> queue{0};
        seen.set(0);
        for (std::size_t h = 0; h < queue.size(); ++h) {
            order.push_back(queue[h]);
            g.neighbors(queue[h]).minus(seen).for_each([&](int w) {
                seen.set(w);
                queue.push_back(w);
            });
        }
    }

    void set_adj(bool side_a, int u, int v, int val) {
        if (failed) return;
        auto& M = side_a ? A : B;
        const int n = side_a ? da : db;
        std::int8_t& cur = M[std::size_t(u) * n + v];
        if (cur != -1) {
            if (cur != val) failed = true;
            return;
        }
        cur = M[std::size_t(v) * n + u] = std::int8_t(val);
        trail.emplace_back(side_a ? TrailOp::set_a : TrailOp::set_b,
                           u * n + v);
        if (val == 1)
            for (std::size_t k = 0; k < pending_edge.size() && !failed; ++k) {
                PendingEdge pd = pending_edge[k];
                if (side_a && pd.a == u * n + v)
                    set_adj(false, pd.b / db, pd.b % db, 0);
                else if (!side_a && pd.b == u * n + v)
                    set_adj(true, pd.a / da, pd.a % da, 0);
            }
    }

    void set_cn(bool side_a, int u, int v, int val) {
        if (failed) return;
        auto& M = side_a ? cnA : cnB;
        const int n = side_a ? da : db;
        const int bound = side_a ? da : db;
        if (val < 0 || val > bound) {
            failed = true;
            return;
        }
        int& cur = M[std::size_t(u) * n + v];
        if (cur != -1) {
            if (cur != val) failed = true;
            return;
        }
        cur = M[std::size_t(v) * n + u] = val;
        trail.emplace_back(side_a ? TrailOp::set_cna : TrailOp::set_cnb,
                           u * n + v);
        for (std::size_t k = 0; k < pending_cn.size() && !failed; ++k) {
            PendingCn pd = pending_cn[k];
            if (side_a && pd.a == u * n + v)
                resolve_cn(pd.c, val, cnB[pd.b], pd.a, pd.b);
            else if (!side_a && pd.b == u * n + v)
                resolve_cn(pd.c, cnA[pd.a], val, pd.a, pd.b);
        }
    }

    // enforce cnA[apos] * cnB[bpos] = c given the currently known sides
    void resolve_cn(int c, int aval, int bval, int apos, int bpos) {
        if (failed) return;
        if (aval != -1 && bval != -1) {
            if (aval * bval != c) failed = true;
            return;
        }
        if (aval != -1) {
            if (c == 0) {
                if (aval != 0) set_cn(false, bpos / db, bpos % db, 0);
                return;  // aval == 0 satisfies the product regardless of b
            }
            if (aval == 0 || c % aval != 0) {
                failed = true;
                return;
            }
            set_cn(false, bpos / db, bpos % db, c / aval);
            return;
        }
        if (bval != -1) {
            if (c == 0) {
                if (bval != 0) set_cn(true, apos / da, apos % da, 0);
                return;
            }
            if (bval == 0 || c % bval != 0) {
                failed = true;
                return;
            }
            set_cn(true, apos / da, apos % da, c / bval);
            return;
        }
        // both unknown: settle now if only one factorization fits the bounds
        int fits = 0, fa = -1, fb = -1;
        if (c == 0) return defer_cn(c, apos, bpos);
        for (int a = 1; a <= da; ++a) {
            if (c % a != 0) continue;
            int b = c / a;
            if (b < 1 || b > db) continue;
            ++fits;
            fa = a;
            fb = b;
        }
        if (fits == 0) {
            failed = true;
            return;
        }
        if (fits == 1) {
            set_cn(true, apos / da, apos % da, fa);
            set_cn(false, bpos / db, bpos % db, fb);
            return;
        }
        defer_cn(c, apos, bpos);
    }

    void defer_cn(int c, int apos, int bpos) {
        pending_cn.push_back({apos, bpos, c});
        trail.emplace_back(TrailOp::pop_cn, 0);
    }

    void constrain(int v, int w) {
        if (failed) return;
        // closed-neighborhood product constraint
        resolve_cn(cnx[std::size_t(v) * x.size() + w],
                   cnA[std::size_t(ci[v]) * da + ci[w]],
                   cnB[std::size_t(cj[v]) * db + cj[w]], ci[v] * da + ci[w],
                   cj[v] * db + cj[w]);
        if (failed || v == w) return;

        bool edge = x.has_edge(v, w);
        if (ci[v] == ci[w]) {
            set_adj(false, cj[v], cj[w], edge);
            return;
        }
        if (cj[v] == cj[w]) {
            set_adj(true, ci[v], ci[w], edge);
            return;
        }
        if (edge) {
            set_adj(true, ci[v], ci[w], 1);
            set_adj(false, cj[v], cj[w], 1);
            return;
        }
        int a = ci[v] * da + ci[w], b = cj[v] * db + cj[w];
        std::int8_t av = A[a], bv = B[b];
        if (av == 1 && bv == 1) {
            failed = true;
            return;
        }
        if (av == 1) return set_adj(false, cj[v], cj[w], 0);
        if (bv == 1) return set_adj(true, ci[v], ci[w], 0);
        if (av == 0 || bv == 0) return;
        pending_edge.push_back({a, b});
        trail.emplace_back(TrailOp::pop_edge, 0);
    }

    void rewind(std::size_t mark) {
        failed = false;
        while (trail.size() > mark) {
            auto [op, at] = trail.back();
            trail.pop_back();
            switch (op) {
                case TrailOp::set_a:
                    A[at] = A[std::size_t(at % da) * da + at / da] = -1;
                    break;
                case TrailOp::set_b:
                    B[at] = B[std::size_t(at % db) * db + at / db] = -1;
                    break;
                case TrailOp::set_cna:
                    cnA[at] = cnA[std::size_t(at % da) * da + at / da] = -1;
                    break;
                case TrailOp::set_cnb:
                    cnB[at] = cnB[std::size_t(at % db) * db + at / db] = -1;
                    break;
                case TrailOp::pop_edge:
                    pending_edge.pop_back();
                    break;
                case TrailOp::pop_cn:
                    pending_cn.pop_back();
                    break;
            }
        }
    }

    // The completed assignment must reproduce x exactly. A full grid pins
    // every A/B entry (each fiber pair shares a column), and this check
    // subsumes any constraint still deferred.
    bool final_check() {
        for (int v = 0; v < x.size(); ++v)
            for (int w = v + 1; w < x.size(); ++w) {
                bool ea = ci[v] != ci[w] &&
                          A[std::size_t(ci[v]) * da + ci[w]] == 1;
                bool eb = cj[v] != cj[w] &&
                          B[std::size_t(cj[v]) * db + cj[w]] == 1;
                bool adjacent = (ci[v] == ci[w] && eb) ||
                                (cj[v] == cj[w] && ea) || (ea && eb);
                if (adjacent != x.has_edge(v, w)) return false;
            }
        return true;
    }

    bool feasible(int v, int i, int j) {
        std::size_t mark = trail.size();
        ci[v] = i;
        cj[v] = j;
        for (int w : assigned) {
            constrain(v, w);
            if (failed) break;
        }
        if (!failed) constrain(v, v);
        bool ok = !failed;
        rewind(mark);
        ci[v] = cj[v] = -1;
        return ok;
    }

    // fail-first: branch on the unassigned vertex with the fewest cells
    // that survive constraint propagation
    bool solve(std::size_t t) {
        if (t == order.size()) return final_check();
        int best_v = -1;
        std::vector<std::pair<int, int>> best_cells;
        for (int v : order) {
            if (ci[v] != -1) continue;
            std::vector<std::pair<int, int>> cells;
            for (int i = 0; i <= std::min(max_i, da - 1); ++i)
                for (int j = 0; j <= std::min(max_j, db - 1); ++j)
                    if (grid[i * db + j] == -1 && feasible(v, i, j))
                        cells.emplace_back(i, j);
            if (cells.empty()) return false;
            if (best_v < 0 || cells.size() < best_cells.size()) {
                best_v = v;
                best_cells = std::move(cells);
                if (best_cells.size() == 1) break;
            }
        }
        int v = best_v;
        for (auto [i, j] : best_cells) {
            std::size_t mark = trail.size();
            ci[v] = i;
            cj[v] = j;
            for (int w : assigned) {
                constrain(v, w);
                if (failed) break;
            }
            if (!failed) constrain(v, v);
            if (!failed) {
                grid[i * db + j] = v;
                assigned.push_back(v);
                int pi = max_i, pj = max_j;
                max_i = std::max(max_i, i + 1);
                max_j = std::max(max_j, j + 1);
                if (solve(t + 1)) return true;
                max_i = pi;
                max_j = pj;
                assigned.pop_back();
                grid[i * db + j] = -1;
            }
            rewind(mark);
            ci[v] = cj[v] = -1;
        }
        return false;
    }
};

// One split x = A (x) B with 2 <= |A| <= |B|, or nullopt if prime.
struct Split {
    Graph a, b;
    std::vector<int> ci, cj;
};

std::optional<Split> find_split(const Graph& x) {
    const int N = x.size();
    for (int da = 2; da * da <= N; ++da) {
        if (N % da != 0) continue;
        int db = N / da;
        // a vertex's closed neighborhood must factor as a product of closed
        // neighborhoods, both of size >= 2 in connected factors
        bool feasible = true;
        for (int v = 0; v < N && feasible; ++v) {
            int nb = x.degree(v) + 1;
            bool some = false;
            for (int a = 2; a <= da && !some; ++a)
                if (nb % a == 0 && nb / a >= 2 && nb / a <= db) some = true;
            feasible = some;
        }
        if (!feasible) continue;
        SplitSearch s(x, da, db);
        if (s.solve(0)) {
            Split sp;
            sp.a = Graph(da);
            sp.b = Graph(db);
            for (int i = 0; i < da; ++i)
                for (int j = i + 1; j < da; ++j)
                    if (s.A[std::size_t(i) * da + j] == 1) sp.a.add_edge(i, j);
            for (int i = 0; i < db; ++i)
                for (int j = i + 1; j < db; ++j)
                    if (s.B[std::size_t(i) * db + j] == 1) sp.b.add_edge(i, j);
            sp.ci = s.ci;
            sp.cj = s.cj;
            return sp;
        }
    }
    return std::nullopt;
}

Factorization factor_rec(const Graph& g);

// X has a K_p strong factor iff p divides every closed-twin class size:
// columns of K_p (x) B are closed twin p-sets, and conversely grouping each
// class into p-blocks exhibits X as K_p (x) (block quotient).
std::optional<Factorization> strip_complete_factor(const Graph& g) {
    TwinPartition twins = closed_twin_classes(g, Bitset::full(g.size()));
    long long size_gcd = 0;
    for (const auto& cls : twins.classes)
        size_gcd = std::gcd(size_gcd, (long long)cls.size());
    int p = 0;
    for (int d = 2; d <= size_gcd; ++d)
        if (size_gcd % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::nullopt;

    const int nb = g.size() / p;
    std::vector<int> block_of(g.size()), copy_of(g.size());
    int next_block = 0;
    for (const auto& cls : twins.classes)
        for (std::size_t t = 0; t < cls.size(); t += p) {
            for (int k = 0; k < p; ++k) {
                block_of[cls[t + k]] = next_block;
                copy_of[cls[t + k]] = k;
            }
            ++next_block;
        }
    Graph b(nb);
    for (int u = 0; u < g.size(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (u < v && block_of[u] != block_of[v] &&
                !b.has_edge(block_of[u], block_of[v]))
                b.add_edge(block_of[u], block_of[v]);
        });

    Factorization rest = factor_rec(b);
    Factorization out;
    Graph kp(p);
    for (int u = 0; u < p; ++u)
        for (int v = u + 1; v < p; ++v) kp.add_edge(u, v);
    out.factors.push_back(std::move(kp));
    out.factors.insert(out.factors.end(), rest.factors.begin(),
                       rest.factors.end());
    out.iso.resize(g.size());
    for (int v = 0; v < g.size(); ++v)
        out.iso[v] = copy_of[v] * nb + rest.iso[block_of[v]];
    return out;
}

Factorization factor_rec(const Graph& g) {
    if (g.size() == 1) return {{}, {0}};
    if (auto stripped = strip_complete_factor(g)) return std::move(*stripped);
    if (auto sp = find_split(g)) {
        Factorization fa = factor_rec(sp->a);
        Factorization fb = factor_rec(sp->b);
        Factorization out;
        out.factors = fa.factors;
        out.factors.insert(out.factors.end(), fb.factors.begin(),
                           fb.factors.end());
        out.iso.resize(g.size());
        const int bsize = sp->b.size();
        for (int v = 0; v < g.size(); ++v)
            out.iso[v] = fa.iso[sp->ci[v]] * bsize + fb.iso[sp->cj[v]];
        return out;
    }
    Factorization out;
    out.factors.push_back(g);
    out.iso.resize(g.size());
    std::iota(out.iso.begin(), out.iso.end(), 0);
    return out;
}

}  // namespace

Factorization factor_strong(const Graph& x, int limit) {
    if (x.size() > limit)
        throw limit_error("factor_strong: graph exceeds the vertex limit");
    if (x.size() < 1)
        throw std::invalid_argument("factor_strong: empty graph");
    if (connected_components(x).size() != 1)
        throw std::invalid_argument("factor_strong: graph must be connected");
    return factor_rec(x);
}

bool is_prime_strong(const Graph& x, int limit) {
    return factor_strong(x, limit).factors.size() == 1;
}

Outcome<std::pair<GroupTable, Labeling>> product_reduction(
    const Graph& x, const RecognizerOracle& recognize, int limit) {
    using Out = Outcome<std::pair<GroupTable, Labeling>>;
    Factorization f = factor_strong(x, limit);
    const int k = int(f.factors.size());
    if (k == 0) {
        auto direct = recognize(x);
        if (!direct) return Out::reject("composition", "oracle rejected K1");
        Verdict check = verify_labeling(x, direct->second);
        if (!check) return Out{check, std::nullopt};
        return Out::accept(std::move(*direct));
    }

    std::vector<int> sizes(k);
    for (int i = 0; i < k; ++i) sizes[i] = f.factors[i].size();

    // product graph of a factor subset, vertices in mixed radix over the
    // subset's factors in ascending index order
    auto subset_graph = [&](unsigned mask) {
        Graph g(1);
        for (int i = 0; i < k; ++i)
            if (mask >> i & 1) g = g.size() == 1 && i == __builtin_ctz(mask)
                                       ? f.factors[i]
                                       : strong_product(g, f.factors[i]);
        return g;
    };

    const unsigned full = (1u << k) - 1;
    std::vector<Graph> graphs(full + 1, Graph(0));
    for (unsigned m = 1; m <= full; ++m) graphs[m] = subset_graph(m);

    // Stage 0: oracle marks, deduplicated up to isomorphism.
    std::vector<std::optional<std::pair<GroupTable, Labeling>>> marked(full +
                                                                       1);
    std::vector<unsigned> exemplars;
    for (unsigned m = 1; m <= full; ++m) {
        bool reused = false;
        for (unsigned ex : exemplars) {
            if (graphs[ex].size() != graphs[m].size()) continue;
            if (auto pi = isomorphic(graphs[m], graphs[ex])) {
                if (marked[ex]) {
                    Labeling lab;
                    lab.group = marked[ex]->first;
                    lab.map.resize(graphs[m].size());
                    for (int v = 0; v < graphs[m].size(); ++v)
                        lab.map[v] = marked[ex]->second.map[(*pi)[v]];
                    marked[m] = {lab.group, std::move(lab)};
                }
                reused = true;
                break;
            }
        }
        if (reused) continue;
        exemplars.push_back(m);
        if (auto res = recognize(graphs[m])) marked[m] = std::move(res);
    }

    // DP stages: a subset is realized when it splits into two disjoint
    // realized parts; groups and labelings multiply along the split.
    auto digit_split = [&](unsigned m, unsigned part, int v) {
        // index of v's projection onto the factors of `part` (subset of m)
        int out = 0;
        std::vector<int> digits;
        for (int i = k - 1; i >= 0; --i)
            if (m >> i & 1) {
                digits.push_back(v % sizes[i]);
                v /= sizes[i];
            }
        std::reverse(digits.begin(), digits.end());  // ascending factor order
        int d = 0;
        for (int i = 0; i < k; ++i)
            if (m >> i & 1) {
                if (part >> i & 1) out = out * sizes[i] + digits[d];
                ++d;
            }
        return out;
    };

    for (unsigned m = 1; m <= full; ++m) {
        if (marked[m]) continue;
        for (unsigned s = (m - 1) & m; s; s = (s - 1) & m) {
            unsigned t = m ^ s;
            if (!marked[s] || !marked[t]) continue;
            const auto& [gs, labs] = *marked[s];
            const auto& [gt, labt] = *marked[t];
            Labeling lab;
            lab.group = direct_product(gs, gt);
            lab.map.resize(graphs[m].size());
            for (int v = 0; v < graphs[m].size(); ++v)
                lab.map[v] = labs.map[digit_split(m, s, v)] * gt.order +
                             labt.map[digit_split(m, t, v)];
            marked[m] = {lab.group, std::move(lab)};
            break;
        }
    }

    if (!marked[full])
        return Out::reject("composition",
                           "no oracle/product composition realizes the graph");

    Labeling lab;
    lab.group = marked[full]->first;
    lab.map.resize(x.size());
    for (int v = 0; v < x.size(); ++v)
        lab.map[v] = marked[full]->second.map[f.iso[v]];
    Verdict check = verify_labeling(x, lab);
    if (!check) return Out{check, std::nullopt};
    return Out::accept({lab.group, std::move(lab)});
}

RecognizerOracle named_recognizer(const std::string& name) {
    using Res = std::optional<std::pair<GroupTable, Labeling>>;
    if (name == "complete")
        return [](const Graph& g) -> Res {
            if (g.size() < 1 || !is_complete(g)) return std::nullopt;
            auto [x, lab] = build_commuting_graph(make_cyclic(g.size()));
            return std::pair{lab.group, lab};
        };
    if (name == "extraspecial")
        return [](const Graph& g) -> Res {
            auto res = recognize_extraspecial(g);
            if (!res) return std::nullopt;
            return std::move(res.value);
        };
    if (name == "p3")
        return [](const Graph& g) -> Res {
            auto res = recognize_p3(g);
            if (!res) return std::nullopt;
            return std::move(res.value);
        };
    if (name == "dihedral-odd")
        return [](const Graph& g) -> Res {
            if (g.size() < 6 || g.size() % 2 != 0 || (g.size() / 2) % 2 == 0)
                return std::nullopt;
            auto res = recognize_dihedral_odd(g);
            if (!res) return std::nullopt;
            return std::move(res.value);
        };
    throw std::invalid_argument("named_recognizer: unknown oracle " + name);
}

RecognizerOracle combined_recognizer(const std::vector<std::string>& names) {
    std::vector<RecognizerOracle> oracles;
    oracles.reserve(names.size());
    for (const std::string& name : names)
        oracles.push_back(named_recognizer(name));
    return [oracles](const Graph& g)
               -> std::optional<std::pair<GroupTable, Labeling>> {
        for (const RecognizerOracle& oracle : oracles)
            if (auto res = oracle(g)) return res;
        return std::nullopt;
    };
}

}  // namespace comgraph
