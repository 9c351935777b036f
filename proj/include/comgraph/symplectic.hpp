#ifndef COMGRAPH_SYMPLECTIC_HPP
#define COMGRAPH_SYMPLECTIC_HPP

#include <utility>
#include <vector>

#include "comgraph/graph.hpp"
#include "comgraph/group.hpp"
#include "comgraph/verdict.hpp"

namespace comgraph {

// Scalar in GF(p), p prime (checked at construction).
class FpScalar {
public:
    FpScalar(int p, long long v);

    int value() const { return v_; }
    int modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FpScalar operator+(const FpScalar& o) const;
    FpScalar operator-(const FpScalar& o) const;
    FpScalar operator*(const FpScalar& o) const;
    FpScalar operator-() const;
    FpScalar inverse() const;  // throws on zero

    bool operator==(const FpScalar&) const = default;

private:
    int p_;
    int v_;
};

// Coordinate vector in the symplectic space V(2n, p), coordinates ordered
// (alpha_1..alpha_n, beta_1..beta_n) against a symplectic basis e_i, f_i.
class SympVector {
public:
    SympVector(int p, std::vector<int> coords);

    int modulus() const { return p_; }
    int dim() const { return int(c_.size()); }
    int half_dim() const { return dim() / 2; }
    bool is_zero() const;

    int coord(int i) const { return c_[i]; }
    int alpha(int i) const { return c_[i]; }                 // 0-based
    int beta(int i) const { return c_[half_dim() + i]; }
    const std::vector<int>& coords() const { return c_; }

    SympVector scaled(int s) const;
    SympVector plus(const SympVector& o) const;

    static SympVector zero(int p, int n) {
        return SympVector(p, std::vector<int>(2 * n, 0));
    }
    static SympVector unit(int p, int n, int coord, int value = 1);

    bool operator==(const SympVector&) const = default;
    auto operator<=>(const SympVector&) const = default;

private:
    int p_;
    std::vector<int> c_;
};

// <u, v> = sum_i (u.alpha_i v.beta_i - u.beta_i v.alpha_i) mod p.
FpScalar eval_form(const SympVector& u, const SympVector& v);

// Vertex -> vector bijection; certifies edge(u,v) <=> <map[u], map[v]> = 0,
// with exactly one vertex mapped to the zero vector.
struct OrthoLabeling {
    int p = 0;
    int n = 0;
    std::vector<SympVector> map;
};

// Gram matrix of the commutation map of an extraspecial group on greedily
// chosen coset representatives, with Z(g) identified with GF(p) through a
// fixed generator.
struct CommutationForm {
    int p = 0;
    int n = 0;
    std::vector<std::vector<FpScalar>> gram;  // 2n x 2n
    std::vector<int> representatives;         // chosen coset reps, size 2n
    int center_generator = 0;
};

// Rejects unless g is extraspecial of order p^(2n+1): |Z(g)| = p prime,
// commutators central, g/Z elementary abelian, form non-degenerate.
Outcome<CommutationForm> commutation_form(const GroupTable& g);

// Orthogonality graph of the standard form on all p^(2n) vectors together
// with its ground-truth labeling. Vertex index encodes the coordinates in
// base p with alpha_1 most significant; the zero vector is vertex 0.
std::pair<Graph, OrthoLabeling> orthogonality_graph(int n, int p);

// How scalar multiples inside matched twin classes are chosen when labeling
// the orthogonality graph. propagate derives them from cross-class adjacency
// constraints (the default and the only sound choice for p > 2);
// naive_per_class fixes them independently per class in discovery order and
// is kept purely as a regression subject, since it can fail verification on
// valid inputs.
enum class ScalarAssignment { propagate, naive_per_class };

// Decides whether x is the orthogonality graph of a symplectic form on
// V(2n, p), with |x| = p^(2n); on accept, returns a labeling into the
// standard form, exhaustively verified (edge <=> form zero) before return.
Outcome<OrthoLabeling> recognize_orthogonality_graph(
    const Graph& x, int p,
    ScalarAssignment mode = ScalarAssignment::propagate);

}  // namespace comgraph

#endif
