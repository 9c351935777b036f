#include <set>

#include "comgraph/symplectic.hpp"
#include "doctest.h"
#include "harness.hpp"

using namespace comgraph;
using namespace comgraph::harness;

TEST_CASE("FpScalar arithmetic") {
    FpScalar a(7, 3), b(7, 5);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((-a).value() == 4);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(FpScalar(7, -3).value() == 4);
    CHECK_THROWS_AS(FpScalar(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FpScalar(7, 0).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(FpScalar(7, 1) + FpScalar(5, 1), std::invalid_argument);
}

TEST_CASE("eval_form basics") {
    SympVector e1 = SympVector::unit(3, 1, 0), f1 = SympVector::unit(3, 1, 1);
    CHECK(eval_form(e1, f1).value() == 1);
    CHECK(eval_form(f1, e1).value() == 2);  // antisymmetric

    SympVector u(3, {1, 1});   // e1 + f1
    SympVector v(3, {1, 2});   // e1 + 2 f1
    CHECK(eval_form(u, v).value() == 1);
    CHECK(eval_form(u, u).value() == 0);

    SympVector e1d2 = SympVector::unit(5, 2, 0);
    SympVector f2d2 = SympVector::unit(5, 2, 3);
    CHECK(eval_form(e1d2, f2d2).value() == 0);  // <e_1, f_2> = 0

    CHECK_THROWS_AS(eval_form(e1, e1d2), std::invalid_argument);
}

TEST_CASE("eval_form is alternating, antisymmetric, bilinear") {
    std::uint64_t state = 42;
    auto rnd = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return int(state >> 33);
    };
    for (int p : {3, 5}) {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 2;
            std::vector<int> cu(2 * n), cv(2 * n), cw(2 * n);
            for (int i = 0; i < 2 * n; ++i) {
                cu[i] = rnd() % p;
                cv[i] = rnd() % p;
                cw[i] = rnd() % p;
            }
            SympVector u(p, cu), v(p, cv), w(p, cw);
            CHECK(eval_form(u, u).value() == 0);
            CHECK(eval_form(u, v) == -eval_form(v, u));
            CHECK(eval_form(u.plus(v), w) ==
                  eval_form(u, w) + eval_form(v, w));
            int s = 1 + rnd() % (p - 1);
            CHECK(eval_form(u.scaled(s), v) ==
                  eval_form(u, v) * FpScalar(p, s));
        }
    }
}

TEST_CASE("standard form is non-degenerate") {
    for (int n : {1, 2})
        for (int p : {2, 3, 5}) {
            long long size = 1;
            for (int i = 0; i < 2 * n; ++i) size *= p;
            if (size > 1024) continue;
            auto [g, lab] = orthogonality_graph(n, p);
            for (int v = 1; v < int(size); ++v) {
                bool witness = false;
                for (int c = 0; c < 2 * n && !witness; ++c)
                    if (!eval_form(lab.map[v], SympVector::unit(p, n, c))
                             .is_zero())
                        witness = true;
                CHECK(witness);
            }
        }
}

TEST_CASE("commutation_form of extraspecial groups") {
    auto form1 = commutation_form(make_extraspecial(3, 1, 1));
    REQUIRE(form1);
    CHECK(form1->p == 3);
    CHECK(form1->n == 1);
    CHECK(form1->gram[0][0].value() == 0);
    CHECK(form1->gram[0][1].value() == 1);
    CHECK(form1->gram[1][0].value() == 2);  // -1 mod 3
    CHECK(form1->gram[1][1].value() == 0);

    auto form2 = commutation_form(make_extraspecial(3, 1, 2));
    REQUIRE(form2);
    CHECK(form2->gram == form1->gram);

    CHECK_FALSE(commutation_form(make_cyclic(27)));
    CHECK_FALSE(commutation_form(make_dihedral(8)));  // order 16 = 2^4

    for (auto [p, n] : {std::pair{3, 1}, {3, 2}, {5, 1}})
        for (int variant : {1, 2}) {
            auto form = commutation_form(make_extraspecial(p, n, variant));
            REQUIRE(form);
            CHECK(form->p == p);
            CHECK(form->n == n);
            for (int i = 0; i < 2 * n; ++i) {
                CHECK(form->gram[i][i].value() == 0);
                for (int j = 0; j < 2 * n; ++j)
                    CHECK(form->gram[i][j] == -form->gram[j][i]);
            }
        }
}

TEST_CASE("orthogonality_graph shapes") {
    auto [g9, lab9] = orthogonality_graph(1, 3);
    CHECK(g9.size() == 9);
    CHECK(dominant_vertices(g9).count() == 1);
    CHECK(dominant_vertices(g9).test(0));
    Graph nonzero = remove_vertices(g9, dominant_vertices(g9));
    auto comps = connected_components(nonzero);
    CHECK(comps.size() == 4);
    for (const auto& c : comps) CHECK(c.size() == 2);

    auto [g4, lab4] = orthogonality_graph(1, 2);
    CHECK(g4.size() == 4);
    CHECK(dominant_vertices(g4).count() == 1);
    CHECK(remove_vertices(g4, dominant_vertices(g4)).edge_count() == 0);

    auto [g81, lab81] = orthogonality_graph(2, 3);
    CHECK(g81.size() == 81);
    for (int v = 1; v < 81; ++v) CHECK(g81.degree(v) == 26);
}

TEST_CASE("orthogonality recognition round trips") {
    for (auto [n, p] :
         {std::pair{1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 3}}) {
        CAPTURE(n);
        CAPTURE(p);
        auto [g, truth] = orthogonality_graph(n, p);
        for (std::uint64_t seed : {1ull, 2ull}) {
            std::vector<int> pi = seeded_permutation(g.size(), seed);
            Graph shuffled = permute(g, pi);
            auto res = recognize_orthogonality_graph(shuffled, p);
            REQUIRE(res);
            CHECK(res->p == p);
            CHECK(res->n == n);
            // independent re-check of the certificate
            for (int u = 0; u < shuffled.size(); ++u)
                for (int v = u + 1; v < shuffled.size(); ++v)
                    CHECK(shuffled.has_edge(u, v) ==
                          eval_form(res->map[u], res->map[v]).is_zero());
        }
    }
}

TEST_CASE("scalar multiples are closed twins in accepted labelings") {
    auto [g, truth] = orthogonality_graph(2, 3);
    Graph shuffled = permute(g, seeded_permutation(81, 9));
    auto res = recognize_orthogonality_graph(shuffled, 3);
    REQUIRE(res);
    for (int u = 0; u < 81; ++u)
        for (int v = u + 1; v < 81; ++v) {
            if (res->map[u].is_zero() || res->map[v].is_zero()) continue;
            bool multiple = false;
            for (int s = 1; s < 3; ++s)
                if (res->map[u].scaled(s) == res->map[v]) multiple = true;
            if (multiple)
                CHECK(closed_neighborhood(shuffled, u) ==
                      closed_neighborhood(shuffled, v));
        }
}

TEST_CASE("orthogonality recognition rejects") {
    CHECK_FALSE(recognize_orthogonality_graph(complete_graph(9), 3));
    CHECK(recognize_orthogonality_graph(complete_graph(9), 3).verdict.stage ==
          "dominant");
    CHECK(recognize_orthogonality_graph(complete_graph(12), 3).verdict.stage ==
          "size");

    auto [g, lab] = orthogonality_graph(2, 3);
    Graph damaged = g;
    damaged.remove_edge(0, 1);
    CHECK_FALSE(recognize_orthogonality_graph(damaged, 3));

    Graph inner = g;
    inner.remove_edge(1, 2);  // non-dominant pair, if adjacent
    if (g.has_edge(1, 2))
        CHECK_FALSE(recognize_orthogonality_graph(inner, 3));

    CHECK_THROWS_AS(recognize_orthogonality_graph(g, 4),
                    std::invalid_argument);
}

// The per-class "label arbitrarily" reading fails on valid inputs for p > 2:
// scalar choices in different classes are coupled through
// <a e1 + u, b f1 + w> = ab + <u, w>. A recorded shuffle of the 81-vertex
// graph defeats it while constraint propagation succeeds.
TEST_CASE("naive per-class scalars fail where propagation succeeds") {
    const std::uint64_t kRecordedSeed = 1;  // adjusted below if needed
    auto [g, truth] = orthogonality_graph(2, 3);
    Graph shuffled = permute(g, seeded_permutation(81, kRecordedSeed));
    auto naive = recognize_orthogonality_graph(
        shuffled, 3, ScalarAssignment::naive_per_class);
    auto propagated = recognize_orthogonality_graph(shuffled, 3);
    CHECK_FALSE(naive);
    CHECK(naive.verdict.stage == "verify");
    CHECK(propagated);
}
