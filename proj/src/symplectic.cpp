#include "comgraph/symplectic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace comgraph {

FpScalar::FpScalar(int p, long long v) : p_(p) {
    if (!is_prime_number(p))
        throw std::invalid_argument("FpScalar: modulus must be prime");
    v_ = int(((v % p) + p) % p);
}

static void check_same_modulus(const FpScalar& a, const FpScalar& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("FpScalar: modulus mismatch");
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
    check_same_modulus(*this, o);
    return FpScalar(p_, v_ + o.v_);
}

FpScalar FpScalar::operator-(const FpScalar& o) const {
    check_same_modulus(*this, o);
    return FpScalar(p_, v_ - o.v_);
}

FpScalar FpScalar::operator*(const FpScalar& o) const {
    check_same_modulus(*this, o);
    return FpScalar(p_, (long long)v_ * o.v_);
}

FpScalar FpScalar::operator-() const { return FpScalar(p_, -v_); }

FpScalar FpScalar::inverse() const {
    if (v_ == 0) throw std::invalid_argument("FpScalar: zero has no inverse");
    // Fermat: v^(p-2) mod p
    long long r = 1, b = v_, e = p_ - 2;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return FpScalar(p_, r);
}

SympVector::SympVector(int p, std::vector<int> coords)
    : p_(p), c_(std::move(coords)) {
    if (!is_prime_number(p))
        throw std::invalid_argument("SympVector: modulus must be prime");
    if (c_.size() % 2 != 0)
        throw std::invalid_argument("SympVector: dimension must be even");
    for (int& v : c_) v = ((v % p) + p) % p;
}

bool SympVector::is_zero() const {
    for (int v : c_)
        if (v) return false;
    return true;
}

SympVector SympVector::scaled(int s) const {
    std::vector<int> c(c_);
    for (int& v : c) v = int((long long)v * s % p_);
    return SympVector(p_, std::move(c));
}

SympVector SympVector::plus(const SympVector& o) const {
    if (o.p_ != p_ || o.dim() != dim())
        throw std::invalid_argument("SympVector: shape mismatch");
    std::vector<int> c(c_);
    for (int i = 0; i < dim(); ++i) c[i] += o.c_[i];
    return SympVector(p_, std::move(c));
}

SympVector SympVector::unit(int p, int n, int coord, int value) {
    std::vector<int> c(2 * n, 0);
    c[coord] = value;
    return SympVector(p, std::move(c));
}

namespace {

// <u, v> with no wrapper overhead; dimensions assumed equal.
int form_raw(const SympVector& u, const SympVector& v) {
    const int n = u.half_dim(), p = u.modulus();
    long long s = 0;
    for (int i = 0; i < n; ++i)
        s += (long long)u.alpha(i) * v.beta(i) - (long long)u.beta(i) * v.alpha(i);
    return int(((s % p) + p) % p);
}

int mod_inverse(int a, int p) {
    long long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return int(r);
}

}  // namespace

FpScalar eval_form(const SympVector& u, const SympVector& v) {
    if (u.modulus() != v.modulus() || u.dim() != v.dim())
        throw std::invalid_argument("eval_form: shape mismatch");
    return FpScalar(u.modulus(), form_raw(u, v));
}

// ---------------------------------------------------------------------------
// Commutation form of an extraspecial group
// ---------------------------------------------------------------------------

namespace {

// Order = p^e for prime p? Returns (p, e) or (0, 0).
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

}  // namespace

Outcome<CommutationForm> commutation_form(const GroupTable& g) {
    using Out = Outcome<CommutationForm>;
    auto [p, e] = prime_power(g.order);
    if (p == 0 || e < 3 || e % 2 == 0)
        return Out::reject("structure",
                           "order is not p^(2n+1) for a prime p, n >= 1");
    const int n = (e - 1) / 2;

    std::vector<int> z_elems = center(g);
    if (int(z_elems.size()) != p)
        return Out::reject("centre", "centre has order " +
                                         std::to_string(z_elems.size()) +
                                         ", expected " + std::to_string(p));
    const int z = z_elems[1];  // smallest non-identity central element

    std::vector<int> inv(g.order);
    for (int a = 0; a < g.order; ++a) inv[a] = g.inverse(a);

    // discrete log against z over Z(g)
    std::vector<int> dlog(g.order, -1);
    for (int j = 0, cur = 0; j < p; ++j, cur = g.mul(cur, z)) dlog[cur] = j;

    auto commutator = [&](int a, int b) {
        return g.mul(g.mul(inv[a], inv[b]), g.mul(a, b));
    };

    for (int a = 0; a < g.order; ++a) {
        // x^p must be central (elementary abelian quotient)
        int xp = a;
        for (int i = 1; i < p; ++i) xp = g.mul(xp, a);
        if (dlog[xp] < 0)
            return Out::reject("structure", "quotient by the centre is not "
                                            "elementary abelian");
        for (int b = a + 1; b < g.order; ++b)
            if (dlog[commutator(a, b)] < 0)
                return Out::reject("structure", "commutators are not central");
    }

    // Greedy coset representatives: add any element outside the subgroup
    // generated so far by Z and the chosen reps.
    std::vector<bool> span(g.order, false);
    std::vector<int> members;
    for (int c : z_elems) {
        span[c] = true;
        members.push_back(c);
    }
    std::vector<int> reps;
    for (int x = 0; x < g.order && int(members.size()) < g.order; ++x) {
        if (span[x]) continue;
        reps.push_back(x);
        std::vector<int> added{x};
        span[x] = true;
        members.push_back(x);
        while (!added.empty()) {
            int a = added.back();
            added.pop_back();
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (int prod : {g.mul(a, members[i]), g.mul(members[i], a)})
                    if (!span[prod]) {
                        span[prod] = true;
                        members.push_back(prod);
                        added.push_back(prod);
                    }
            }
        }
    }
    if (int(reps.size()) != 2 * n)
        return Out::reject("structure", "quotient rank is not 2n");

    CommutationForm form;
    form.p = p;
    form.n = n;
    form.representatives = reps;
    form.center_generator = z;
    form.gram.reserve(2 * n);
    for (int i = 0; i < 2 * n; ++i) {
        std::vector<FpScalar> row;
        row.reserve(2 * n);
        for (int j = 0; j < 2 * n; ++j)
            row.emplace_back(p, dlog[commutator(reps[i], reps[j])]);
        form.gram.push_back(std::move(row));
    }

    // Non-degeneracy: full rank over GF(p).
    std::vector<std::vector<int>> m(2 * n, std::vector<int>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) m[i][j] = form.gram[i][j].value();
    int rank = 0;
    for (int col = 0; col < 2 * n && rank < 2 * n; ++col) {
        int piv = -1;
        for (int r = rank; r < 2 * n; ++r)
            if (m[r][col]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        int s = mod_inverse(m[rank][col], p);
        for (int j = 0; j < 2 * n; ++j) m[rank][j] = m[rank][j] * s % p;
        for (int r = 0; r < 2 * n; ++r)
            if (r != rank && m[r][col]) {
                int f = m[r][col];
                for (int j = 0; j < 2 * n; ++j)
                    m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
            }
        ++rank;
    }
    if (rank != 2 * n)
        return Out::reject("degenerate", "commutation form is degenerate");
    return Out::accept(std::move(form));
}

// ---------------------------------------------------------------------------
// Orthogonality graph of the standard form
// ---------------------------------------------------------------------------

std::pair<Graph, OrthoLabeling> orthogonality_graph(int n, int p) {
    if (!is_prime_number(p))
        throw std::invalid_argument("orthogonality_graph: p must be prime");
    if (n < 1) throw std::invalid_argument("orthogonality_graph: n must be >= 1");
    long long size = 1;
    for (int i = 0; i < 2 * n; ++i) size *= p;
    if (size > 65536) throw limit_error("orthogonality_graph: p^(2n) > 2^16");
    const int N = int(size);

    OrthoLabeling lab;
    lab.p = p;
    lab.n = n;
    lab.map.reserve(N);
    for (int v = 0; v < N; ++v) {
        std::vector<int> c(2 * n);
        int t = v;
        for (int i = 2 * n - 1; i >= 0; --i) {  // alpha_1 most significant
            c[i] = t % p;
            t /= p;
        }
        lab.map.emplace_back(p, std::move(c));
    }
    Graph x(N);
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
            if (form_raw(lab.map[u], lab.map[v]) == 0) x.add_edge(u, v);
    return {std::move(x), std::move(lab)};
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

namespace {

struct LevelFail {
    std::string stage, reason;
};

// One scalar ray: a closed-twin class inside a matched sector class whose
// labels are the p-1 scalar multiples of a common base vector. slot_a/slot_b
// are the base's e1/f1 coefficients still to be determined (0 = unset,
// values live in F_p^*).
struct ScalarRay {
    enum Kind { pure_mixed, sector_a, sector_b, sector_c } kind;
    int chunk = -1;              // index of the matched V' ray, -1 for pures
    std::vector<int> members;    // ascending vertex ids
    int slot_a = 0;              // e1 coefficient (or r for pure_mixed)
    int slot_b = 0;              // f1 coefficient
    bool full() const {
        switch (kind) {
            case pure_mixed: return slot_a != 0;
            case sector_a: return slot_a != 0;
            case sector_b: return slot_b != 0;
            case sector_c: return slot_a != 0 && slot_b != 0;
        }
        return false;
    }
};

struct Labeler {
    const Graph& x;
    const int p;
    const ScalarAssignment mode;

    // Labels vertices of `verts` by vectors of dimension 2*level, or fails.
    // `verts` always induces the graph under consideration, so every
    // neighborhood is intersected with it.
    std::map<int, SympVector> run(const Bitset& verts, int level) {
        const int count = verts.count();

        // ---- dominant vertex = zero vector -------------------------------
        std::vector<int> dominants;
        verts.for_each([&](int v) {
            if ((x.neighbors(v) & verts).count() == count - 1)
                dominants.push_back(v);
        });
        if (dominants.size() != 1)
            throw LevelFail{"dominant",
                            "expected exactly 1 dominant vertex, found " +
                                std::to_string(dominants.size())};
        const int v0 = dominants[0];

        // ---- hyperbolic pair e1, f1 ---------------------------------------
        int e1 = -1, f1 = -1;
        verts.for_each([&](int v) {
            if (e1 < 0 && v != v0) e1 = v;
        });
        verts.for_each([&](int v) {
            if (f1 < 0 && v != e1 && !x.has_edge(v, e1)) f1 = v;
        });
        if (e1 < 0 || f1 < 0)
            throw LevelFail{"pair", "no non-adjacent pair available"};

        // ---- hyperplane pair's common neighborhood ------------------------
        Bitset vp = verts & x.neighbors(e1) & x.neighbors(f1);
        std::map<int, SympVector> child;
        if (level == 1) {
            if (vp.count() != 1 || !vp.test(v0))
                throw LevelFail{"subspace",
                                "common neighborhood of the pair is not the "
                                "zero vertex alone"};
        } else {
            long long want = 1;
            for (int i = 0; i < 2 * (level - 1); ++i) want *= p;
            if (vp.count() != want)
                throw LevelFail{"subspace",
                                "common neighborhood has size " +
                                    std::to_string(vp.count()) + ", expected " +
                                    std::to_string(want)};
            child = run(vp, level - 1);
        }

        // ---- V' rays (scalar classes of the recursively labeled part) -----
        // ray key: neighborhood inside V' shared by every vertex whose label
        // lies in span{u} + (e1, f1 components).
        std::vector<std::vector<int>> vp_rays;       // members ascending
        std::vector<SympVector> vp_canon;            // label of lowest member
        std::map<Bitset, int> key_to_ray;
        if (level >= 2) {
            std::map<std::vector<int>, std::vector<int>> by_dir;
            vp.for_each([&](int v) {
                if (v == v0) return;
                const SympVector& u = child.at(v);
                int first = 0;
                while (u.coord(first) == 0) ++first;
                by_dir[u.scaled(mod_inverse(u.coord(first), p)).coords()]
                    .push_back(v);
            });
            for (auto& [dir, mem] : by_dir) {
                std::sort(mem.begin(), mem.end());
                vp_rays.push_back(mem);
            }
            std::sort(vp_rays.begin(), vp_rays.end());
            for (auto& mem : vp_rays) {
                vp_canon.push_back(child.at(mem[0]));
                Bitset key = x.neighbors(mem[0]) & vp;
                key.set(mem[0]);
                if (!key_to_ray.emplace(key, int(vp_canon.size()) - 1).second)
                    throw LevelFail{"sectors",
                                    "distinct subspace rays share a "
                                    "neighborhood"};
            }
        }

        // ---- pures: adjacent to all of V' ---------------------------------
        Bitset rest = verts.minus(vp);
        std::vector<int> pures;
        std::vector<int> sector_av, sector_bv, sector_cv;
        rest.for_each([&](int v) {
            if ((x.neighbors(v) & vp) == vp) {
                pures.push_back(v);
                return;
            }
            bool ae = x.has_edge(v, e1), af = x.has_edge(v, f1);
            if (ae && !af)
                sector_av.push_back(v);
            else if (!ae && af)
                sector_bv.push_back(v);
            else if (!ae && !af)
                sector_cv.push_back(v);
            else
                throw LevelFail{"sectors",
                                "vertex adjacent to both e1 and f1 outside "
                                "the subspace"};
        });
        if (int(pures.size()) != p * p - 1)
            throw LevelFail{"sectors",
                            "found " + std::to_string(pures.size()) +
                                " vertices adjacent to the whole subspace, "
                                "expected " +
                                std::to_string(p * p - 1)};

        // twin classes inside the pures: each is one scalar ray
        auto twin_rays = [&](const std::vector<int>& vs) {
            std::map<Bitset, std::vector<int>> by_nb;
            for (int v : vs) {
                Bitset key = x.neighbors(v) & verts;
                key.set(v);
                by_nb[key].push_back(v);
            }
            std::vector<std::vector<int>> rays;
            for (auto& [k, mem] : by_nb) {
                std::sort(mem.begin(), mem.end());
                rays.push_back(mem);
            }
            std::sort(rays.begin(), rays.end());
            return rays;
        };

        std::vector<std::vector<int>> pure_rays = twin_rays(pures);
        if (int(pure_rays.size()) != p + 1)
            throw LevelFail{"sectors", "pure vectors form " +
                                           std::to_string(pure_rays.size()) +
                                           " twin classes, expected " +
                                           std::to_string(p + 1)};
        int e1_ray = -1, f1_ray = -1;
        for (std::size_t i = 0; i < pure_rays.size(); ++i) {
            if (int(pure_rays[i].size()) != p - 1)
                throw LevelFail{"sectors", "pure twin class of wrong size"};
            for (int v : pure_rays[i]) {
                if (v == e1) e1_ray = int(i);
                if (v == f1) f1_ray = int(i);
            }
        }
        if (e1_ray < 0 || f1_ray < 0 || e1_ray == f1_ray)
            throw LevelFail{"sectors", "e1/f1 classes are inconsistent"};

        // ---- sector chunks matched to V' rays by subspace neighborhood ----
        // chunk_rays[kind][ray] = scalar rays of that sector over that V' ray
        const int R = int(vp_rays.size());
        auto chunk_split = [&](const std::vector<int>& vs, const char* what,
                               int rays_per_chunk)
            -> std::vector<std::vector<std::vector<int>>> {
            std::vector<std::vector<int>> per_chunk(R);
            for (int v : vs) {
                Bitset key = x.neighbors(v) & vp;
                auto it = key_to_ray.find(key);
                if (it == key_to_ray.end())
                    throw LevelFail{"sectors",
                                    std::string(what) +
                                        " vertex matches no subspace ray"};
                per_chunk[it->second].push_back(v);
            }
            std::vector<std::vector<std::vector<int>>> out(R);
            for (int r = 0; r < R; ++r) {
                if (int(per_chunk[r].size()) != rays_per_chunk * (p - 1))
                    throw LevelFail{"sectors",
                                    std::string(what) +
                                        " class over a subspace ray has size " +
                                        std::to_string(per_chunk[r].size()) +
                                        ", expected " +
                                        std::to_string(rays_per_chunk * (p - 1))};
                out[r] = twin_rays(per_chunk[r]);
                if (int(out[r].size()) != rays_per_chunk)
                    throw LevelFail{"sectors",
                                    std::string(what) +
                                        " class splits into wrong ray count"};
                for (auto& ray : out[r])
                    if (int(ray.size()) != p - 1)
                        throw LevelFail{"sectors",
                                        std::string(what) +
                                            " scalar class of wrong size"};
            }
            return out;
        };

        std::vector<std::vector<std::vector<int>>> a_rays, b_rays, c_rays;
        if (level >= 2) {
            a_rays = chunk_split(sector_av, "e1-sector", p - 1);
            b_rays = chunk_split(sector_bv, "f1-sector", p - 1);
            c_rays = chunk_split(sector_cv, "mixed-sector", (p - 1) * (p - 1));
        } else if (!sector_av.empty() || !sector_bv.empty() ||
                   !sector_cv.empty()) {
            throw LevelFail{"sectors", "unexpected vertices beyond the pures"};
        }

        // ---- scalar rays + assignment -------------------------------------
        std::vector<ScalarRay> rays;
        for (std::size_t i = 0; i < pure_rays.size(); ++i) {
            if (int(i) == e1_ray || int(i) == f1_ray) continue;
            rays.push_back({ScalarRay::pure_mixed, -1, pure_rays[i], 0, 0});
        }
        const int pm_count = int(rays.size());
        for (int r = 0; r < R; ++r)
            for (auto& mem : a_rays[r])
                rays.push_back({ScalarRay::sector_a, r, mem, 0, 0});
        for (int r = 0; r < R; ++r)
            for (auto& mem : b_rays[r])
                rays.push_back({ScalarRay::sector_b, r, mem, 0, 0});
        for (int r = 0; r < R; ++r)
            for (auto& mem : c_rays[r])
                rays.push_back({ScalarRay::sector_c, r, mem, 0, 0});

        if (level == 1 || mode == ScalarAssignment::naive_per_class)
            assign_naive(rays, pm_count);
        else
            propagate(rays, vp_canon);

        // ---- emit labels ---------------------------------------------------
        std::map<int, SympVector> out;
        out.emplace(v0, SympVector::zero(p, level));
        auto child_part = [&](int chunk) -> SympVector {
            return chunk < 0 ? SympVector::zero(p, level - 1)
                             : vp_canon[chunk];
        };
        auto assemble = [&](int a, int b, const SympVector& u) {
            std::vector<int> c(2 * level);
            c[0] = a;
            c[level] = b;
            for (int i = 0; i < level - 1; ++i) {
                c[1 + i] = u.alpha(i);
                c[level + 1 + i] = u.beta(i);
            }
            return SympVector(p, std::move(c));
        };
        auto emit_ray = [&](const std::vector<int>& members,
                            const SympVector& base) {
            int s = 1;
            for (int v : members) out.emplace(v, base.scaled(s++));
        };
        emit_ray(pure_rays[e1_ray],
                 assemble(1, 0, SympVector::zero(p, level - 1)));
        emit_ray(pure_rays[f1_ray],
                 assemble(0, 1, SympVector::zero(p, level - 1)));
        for (const ScalarRay& ray : rays) {
            switch (ray.kind) {
                case ScalarRay::pure_mixed:
                    emit_ray(ray.members,
                             assemble(1, ray.slot_a,
                                      SympVector::zero(p, level - 1)));
                    break;
                case ScalarRay::sector_a:
                    emit_ray(ray.members,
                             assemble(ray.slot_a, 0, child_part(ray.chunk)));
                    break;
                case ScalarRay::sector_b:
                    emit_ray(ray.members,
                             assemble(0, ray.slot_b, child_part(ray.chunk)));
                    break;
                case ScalarRay::sector_c:
                    emit_ray(ray.members,
                             assemble(ray.slot_a, ray.slot_b,
                                      child_part(ray.chunk)));
                    break;
            }
        }
        for (auto& [v, u] : child)
            if (v != v0) out.emplace(v, assemble(0, 0, u));
        return out;
    }

    // Per-class assignment in discovery order, no cross-class coupling.
    void assign_naive(std::vector<ScalarRay>& rays, int pm_count) {
        int pm_next = 1;
        std::map<int, int> a_next, b_next;
        std::map<int, std::pair<int, int>> c_next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            ScalarRay& r = rays[i];
            switch (r.kind) {
                case ScalarRay::pure_mixed:
                    r.slot_a = pm_next++;
                    break;
                case ScalarRay::sector_a: {
                    int& nx = a_next.emplace(r.chunk, 1).first->second;
                    r.slot_a = nx++;
                    break;
                }
                case ScalarRay::sector_b: {
                    int& nx = b_next.emplace(r.chunk, 1).first->second;
                    r.slot_b = nx++;
                    break;
                }
                case ScalarRay::sector_c: {
                    auto& nx =
                        c_next.emplace(r.chunk, std::pair{1, 1}).first->second;
                    r.slot_a = nx.first;
                    r.slot_b = nx.second;
                    if (++nx.second == p) {
                        nx.second = 1;
                        ++nx.first;
                    }
                    break;
                }
            }
        }
        (void)pm_count;
    }

    // Fixpoint propagation of scalar slots along graph edges between rays.
    // Every edge between rays of different sectors pins one slot in terms of
    // another; the seed fixes the one global degree of freedom.
    void propagate(std::vector<ScalarRay>& rays,
                   const std::vector<SympVector>& canon) {
        const int R = int(rays.size());
        if (R == 0) return;

        // ray-level adjacency through class representatives
        std::vector<std::vector<int>> adj(R);
        for (int i = 0; i < R; ++i)
            for (int j = i + 1; j < R; ++j)
                if (x.has_edge(rays[i].members[0], rays[j].members[0])) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }

        auto fp = [&](int chunk_i, int chunk_j) {
            return form_raw(canon[chunk_i], canon[chunk_j]);
        };
        auto inv = [&](int v) { return mod_inverse(v, p); };
        auto mule = [&](long long a, long long b) {
            return int(((a * b) % p + p) % p);
        };

        bool conflict = false;
        auto put = [&](int& slot, int value) {
            if (value == 0) {
                conflict = true;  // edge that no scalar choice can satisfy
                return false;
            }
            if (slot == 0) {
                slot = value;
                return true;
            }
            if (slot != value) conflict = true;
            return false;
        };

        // worklist over rays whose slots changed
        std::vector<int> work;
        std::vector<bool> queued(R, false);
        auto push = [&](int i) {
            if (!queued[i]) {
                queued[i] = true;
                work.push_back(i);
            }
        };

        // seed: first e1-sector ray gets coefficient 1
        for (int i = 0; i < R; ++i)
            if (rays[i].kind == ScalarRay::sector_a) {
                rays[i].slot_a = 1;
                push(i);
                break;
            }

        auto step = [&](int si, int ti) {
            ScalarRay& s = rays[si];
            ScalarRay& t = rays[ti];
            using K = ScalarRay;
            bool changed = false;
            // A(a) -- B(b): ab = -<u, w>
            if (s.kind == K::sector_a && t.kind == K::sector_b && s.slot_a) {
                changed |= put(t.slot_b,
                               mule(-fp(s.chunk, t.chunk), inv(s.slot_a)));
            } else if (s.kind == K::sector_b && t.kind == K::sector_a &&
                       s.slot_b) {
                changed |= put(t.slot_a,
                               mule(-fp(t.chunk, s.chunk), inv(s.slot_b)));
            }
            // C(a,b) -- A(a'): b a' = <u_C, u_A>
            else if (s.kind == K::sector_a && t.kind == K::sector_c &&
                     s.slot_a) {
                changed |= put(t.slot_b,
                               mule(fp(t.chunk, s.chunk), inv(s.slot_a)));
            } else if (s.kind == K::sector_c && t.kind == K::sector_a &&
                       s.slot_b) {
                changed |= put(t.slot_a,
                               mule(fp(s.chunk, t.chunk), inv(s.slot_b)));
            }
            // C(a,b) -- B(b'): a b' = -<u_C, w_B>
            else if (s.kind == K::sector_b && t.kind == K::sector_c &&
                     s.slot_b) {
                changed |= put(t.slot_a,
                               mule(-fp(t.chunk, s.chunk), inv(s.slot_b)));
            } else if (s.kind == K::sector_c && t.kind == K::sector_b &&
                       s.slot_a) {
                changed |= put(t.slot_b,
                               mule(-fp(s.chunk, t.chunk), inv(s.slot_a)));
            }
            // C(a,b) -- C(a',b'): a b' - b a' + <u, u'> = 0
            else if (s.kind == K::sector_c && t.kind == K::sector_c &&
                     s.slot_a && s.slot_b) {
                int e = fp(s.chunk, t.chunk);
                if (t.slot_a && !t.slot_b)
                    changed |= put(t.slot_b,
                                   mule(mule(s.slot_b, t.slot_a) - e,
                                        inv(s.slot_a)));
                else if (t.slot_b && !t.slot_a)
                    changed |= put(t.slot_a,
                                   mule(mule(s.slot_a, t.slot_b) + e,
                                        inv(s.slot_b)));
            }
            // C(a,b) -- pure e1 + r f1: b = a r
            else if (s.kind == K::sector_c && t.kind == K::pure_mixed &&
                     s.slot_a && s.slot_b) {
                changed |= put(t.slot_a, mule(s.slot_b, inv(s.slot_a)));
            } else if (s.kind == K::pure_mixed && t.kind == K::sector_c &&
                       s.slot_a) {
                if (t.slot_a && !t.slot_b)
                    changed |= put(t.slot_b, mule(t.slot_a, s.slot_a));
                else if (t.slot_b && !t.slot_a)
                    changed |= put(t.slot_a, mule(t.slot_b, inv(s.slot_a)));
            }
            if (changed) push(ti);
        };

        while (!work.empty() && !conflict) {
            int i = work.back();
            work.pop_back();
            queued[i] = false;
            for (int j : adj[i]) {
                step(i, j);
                step(j, i);
                if (conflict) break;
            }
        }
        if (conflict)
            throw LevelFail{"scalar-propagation",
                            "inconsistent scalar constraints"};
        for (const ScalarRay& r : rays)
            if (!r.full())
                throw LevelFail{"scalar-propagation",
                                "scalar class left undetermined"};
    }
};

}  // namespace

Outcome<OrthoLabeling> recognize_orthogonality_graph(const Graph& x, int p,
                                                     ScalarAssignment mode) {
    using Out = Outcome<OrthoLabeling>;
    if (!is_prime_number(p))
        throw std::invalid_argument(
            "recognize_orthogonality_graph: p must be prime");

    const int N = x.size();
    int n = 0;
    {
        long long cur = 1;
        while (cur < N) {
            cur *= p * p;
            ++n;
        }
        if (cur != N || n < 1)
            return Out::reject("size", "vertex count " + std::to_string(N) +
                                           " is not p^(2n) for p = " +
                                           std::to_string(p));
    }
    if (n > 6 || N > 65536)
        throw limit_error("recognize_orthogonality_graph: beyond size limits");

    std::map<int, SympVector> labels;
    try {
        Labeler lab{x, p, mode};
        labels = lab.run(Bitset::full(N), n);
    } catch (const LevelFail& f) {
        return Out::reject(f.stage, f.reason);
    }

    // Exhaustive certification: bijective labels, edge <=> form zero.
    std::vector<SympVector> map;
    map.reserve(N);
    for (int v = 0; v < N; ++v) map.push_back(labels.at(v));
    {
        std::set<std::vector<int>> distinct;
        for (const SympVector& u : map) distinct.insert(u.coords());
        if (int(distinct.size()) != N)
            return Out::reject("verify", "labeling is not a bijection");
    }
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v)
            if ((form_raw(map[u], map[v]) == 0) != x.has_edge(u, v))
                return Out::reject(
                    "verify", "edge/form mismatch at pair (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    return Out::accept(OrthoLabeling{p, n, std::move(map)});
}

}  // namespace comgraph
