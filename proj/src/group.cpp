#include "comgraph/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "comgraph/graph.hpp"

namespace comgraph {

int GroupTable::inverse(int a) const {
    for (int b = 0; b < order; ++b)
        if (mul(a, b) == 0) return b;
    throw std::logic_error("group: element has no inverse");
}

int GroupTable::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
        if (k > order) throw std::logic_error("group: runaway element order");
    }
    return k;
}

bool is_prime_number(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Verdict validate_table(const GroupTable& t, bool force_associativity) {
    const int n = t.order;
    if (n <= 0 || int(t.table.size()) != n * n)
        return Verdict::rejected("shape", "table is not order x order");
    for (int e : t.table)
        if (e < 0 || e >= n)
            return Verdict::rejected("shape", "entry out of range");
    if (!t.names.empty() && int(t.names.size()) != n)
        return Verdict::rejected("shape", "names size mismatch");

    for (int j = 0; j < n; ++j)
        if (t.mul(0, j) != j)
            return Verdict::rejected(
                "identity", "0 is not a left identity at j=" + std::to_string(j));
    for (int i = 0; i < n; ++i)
        if (t.mul(i, 0) != i)
            return Verdict::rejected(
                "identity", "0 is not a right identity at i=" + std::to_string(i));

    std::vector<bool> seen(n);
    for (int i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), false);
        for (int j = 0; j < n; ++j) {
            if (seen[t.mul(i, j)])
                return Verdict::rejected(
                    "latin-square", "row " + std::to_string(i) + " repeats");
            seen[t.mul(i, j)] = true;
        }
    }
    for (int j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), false);
        for (int i = 0; i < n; ++i) {
            if (seen[t.mul(i, j)])
                return Verdict::rejected(
                    "latin-square", "column " + std::to_string(j) + " repeats");
            seen[t.mul(i, j)] = true;
        }
    }

    if (n <= 512 || force_associativity) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (t.mul(t.mul(i, j), k) != t.mul(i, t.mul(j, k)))
                        return Verdict::rejected(
                            "associativity",
                            "fails at (i,j,k)=(" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                ")");
    }
    return Verdict::accepted();
}

GroupTable make_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("make_cyclic: n must be positive");
    GroupTable t;
    t.order = n;
    t.table.resize(std::size_t(n) * n);
    t.names.reserve(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(i, j) = (i + j) % n;
    for (int i = 0; i < n; ++i)
        t.names.push_back(i == 0 ? "1" : "g^" + std::to_string(i));
    return t;
}

GroupTable make_dihedral(int m) {
    if (m < 3) throw std::invalid_argument("make_dihedral: m must be >= 3");
    const int n = 2 * m;
    GroupTable t;
    t.order = n;
    t.table.resize(std::size_t(n) * n);
    // index i < m: b^i; index m+i: a b^i. Relations give b^i a = a b^(-i).
    auto idx = [m](bool refl, int pow) {
        return (refl ? m : 0) + ((pow % m) + m) % m;
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            t.at(idx(false, i), idx(false, j)) = idx(false, i + j);
            t.at(idx(false, i), idx(true, j)) = idx(true, j - i);
            t.at(idx(true, i), idx(false, j)) = idx(true, i + j);
            t.at(idx(true, i), idx(true, j)) = idx(false, j - i);
        }
    t.names.reserve(n);
    for (int r = 0; r < 2; ++r)
        for (int i = 0; i < m; ++i) {
            std::string s = r ? "a" : "";
            if (i) s += "b^" + std::to_string(i);
            if (s.empty()) s = "1";
            t.names.push_back(s);
        }
    return t;
}

int extraspecial_index(int p, int n, int j, const std::vector<int>& alpha,
                       const std::vector<int>& beta) {
    int idx = 0;
    for (int i = n - 1; i >= 0; --i) idx = idx * p + beta[i] % p;
    for (int i = n - 1; i >= 0; --i) idx = idx * p + alpha[i] % p;
    return idx * p + j % p;
}

GroupTable make_extraspecial(int p, int n, int variant) {
    if (!is_prime_number(p) || p == 2)
        throw std::invalid_argument("make_extraspecial: p must be an odd prime");
    if (n < 1) throw std::invalid_argument("make_extraspecial: n must be >= 1");
    if (variant != 1 && variant != 2)
        throw std::invalid_argument("make_extraspecial: variant must be 1 or 2");

    long long ord = 1;
    for (int i = 0; i < 2 * n + 1; ++i) ord *= p;
    if (ord > 1 << 20)
        throw limit_error("make_extraspecial: order too large");
    const int N = int(ord);

    // digits(e) = (j, alpha_1..alpha_n, beta_1..beta_n), j least significant
    const int D = 2 * n + 1;
    std::vector<int> dig(std::size_t(N) * D);
    for (int e = 0; e < N; ++e) {
        int v = e;
        for (int i = 0; i < D; ++i) {
            dig[std::size_t(e) * D + i] = v % p;
            v /= p;
        }
    }

    GroupTable t;
    t.order = N;
    t.table.resize(std::size_t(N) * N);
    for (int a = 0; a < N; ++a) {
        const int* da = &dig[std::size_t(a) * D];
        for (int b = 0; b < N; ++b) {
            const int* db = &dig[std::size_t(b) * D];
            // Collect x-parts of b through y-parts of a: each transposition
            // of y_i past x_i contributes z^-1 since x y = y x z.
            int j = da[0] + db[0];
            int idx = 0;
            for (int i = n; i >= 1; --i) {
                int bi = da[n + i] + db[n + i];
                if (variant == 2) j += bi / p;  // y_i^p = z
                idx = idx * p + bi % p;
            }
            for (int i = n; i >= 1; --i) {
                j -= da[n + i] * db[i];
                idx = idx * p + (da[i] + db[i]) % p;
            }
            t.at(a, b) = idx * p + ((j % p) + p) % p;
        }
    }
    return t;
}

GroupTable make_semidirect_cyclic(int q, int k, int r) {
    if (q < 1 || k < 1)
        throw std::invalid_argument("make_semidirect_cyclic: q, k must be >= 1");
    r = ((r % q) + q) % q;
    if (std::gcd(r, q) != 1)
        throw std::invalid_argument("make_semidirect_cyclic: gcd(r, q) != 1");
    long long rk = 1;
    for (int i = 0; i < k; ++i) rk = (rk * r) % q;
    if (rk % q != 1 % q)
        throw std::invalid_argument("make_semidirect_cyclic: r^k != 1 (mod q)");

    // Precompute r^j mod q; (x^i1 y^j1)(x^i2 y^j2) = x^(i1 + i2 r^j1) y^(j1+j2)
    std::vector<long long> rpow(k);
    rpow[0] = 1 % q;
    for (int j = 1; j < k; ++j) rpow[j] = rpow[j - 1] * r % q;

    const int n = q * k;
    GroupTable t;
    t.order = n;
    t.table.resize(std::size_t(n) * n);
    for (int i1 = 0; i1 < q; ++i1)
        for (int j1 = 0; j1 < k; ++j1)
            for (int i2 = 0; i2 < q; ++i2)
                for (int j2 = 0; j2 < k; ++j2) {
                    int i = int((i1 + i2 * rpow[j1]) % q);
                    int j = (j1 + j2) % k;
                    t.at(i1 * k + j1, i2 * k + j2) = i * k + j;
                }
    return t;
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
    const int n = g.order * h.order;
    GroupTable t;
    t.order = n;
    t.table.resize(std::size_t(n) * n);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < h.order; ++b)
            for (int c = 0; c < g.order; ++c)
                for (int d = 0; d < h.order; ++d)
                    t.at(a * h.order + b, c * h.order + d) =
                        g.mul(a, c) * h.order + h.mul(b, d);
    return t;
}

std::vector<int> center(const GroupTable& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order && central; ++y)
            central = g.commutes(x, y);
        if (central) z.push_back(x);
    }
    return z;
}

std::vector<int> centralizer(const GroupTable& g, int x) {
    std::vector<int> c;
    for (int y = 0; y < g.order; ++y)
        if (g.commutes(x, y)) c.push_back(y);
    return c;
}

ConjugacyPartition conjugacy_classes(const GroupTable& g) {
    std::vector<int> inv(g.order);
    for (int a = 0; a < g.order; ++a) inv[a] = g.inverse(a);
    std::vector<bool> seen(g.order, false);
    ConjugacyPartition part;
    for (int x = 0; x < g.order; ++x) {
        if (seen[x]) continue;
        std::vector<int> cls;
        for (int a = 0; a < g.order; ++a) {
            int y = g.mul(inv[a], g.mul(x, a));
            if (!seen[y]) {
                seen[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        part.classes.push_back(std::move(cls));
    }
    return part;
}

std::vector<std::vector<int>> maximal_abelian_subgroups(const GroupTable& g) {
    if (g.order > 512)
        throw limit_error("maximal_abelian_subgroups: n > 512");
    Graph commuting(g.order);
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.commutes(a, b)) commuting.add_edge(a, b);
    std::vector<std::vector<int>> out;
    for (const Bitset& c : maximal_cliques(commuting))
        out.push_back(c.to_vector());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace comgraph
