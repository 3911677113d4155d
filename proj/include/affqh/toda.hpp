#pragma once

#include "affqh/linalg.hpp"
#include "affqh/quantum_aff.hpp"
#include "affqh/root_data.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affqh {

// Relation polynomials of a rank n type live in Q[q_0..q_n, x_1..x_n]:
// q_j is Poly variable j and x_i is Poly variable n + i. deg x_i = 1, deg q_j = 2.

inline int x_var(int n, int i) { return n + i; }
inline Poly rel_q(int /*n*/, int j) { return Poly::var(j); }
inline Poly rel_x(int n, int i) { return Poly::var(x_var(n, i)); }

inline std::vector<int> relation_weights(int n) {
    std::vector<int> w(2 * n + 1, 1);
    for (int j = 0; j <= n; ++j) w[j] = 2;
    return w;
}
inline std::vector<std::string> relation_names(int n, bool latex = false) {
    std::vector<std::string> v;
    for (int j = 0; j <= n; ++j) v.push_back(latex ? "q_" + std::to_string(j) : "q" + std::to_string(j));
    for (int i = 1; i <= n; ++i) v.push_back(latex ? "x_" + std::to_string(i) : "x" + std::to_string(i));
    return v;
}

struct Relation {
    std::string name;
    Poly poly;
    int degree = 0;
};

inline Relation make_relation(int n, std::string name, Poly p) {
    auto w = relation_weights(n);
    if (p.is_zero() || !p.is_homogeneous(w)) throw std::invalid_argument("relation " + name + " is not homogeneous");
    int d = p.weighted_degree(w);
    return {std::move(name), std::move(p), d};
}

/// H_1..H_{n-1} for Fl(n) (type A_{n-1}) from det(A(q;x) + lambda I) of the
/// periodic Toda Lax matrix, keeping the z-free part. H_k has degree k + 1.
inline std::vector<Relation> typeA_relations(int n) {
    if (n < 2) throw std::invalid_argument("typeA_relations: n must be at least 2");
    int r = n - 1;
    int lam = 2 * r + 1;
    if (lam >= kMaxVars) throw std::invalid_argument("typeA_relations: n too large for the polynomial ring");
    // Entries are Laurent polynomials in z, stored by z-exponent.
    using Entry = std::map<int, Poly>;
    std::vector<std::vector<Entry>> A(n, std::vector<Entry>(n));
    auto x = [&](int i) { return rel_x(r, i); };
    for (int i = 0; i < n; ++i) {
        Poly d = Poly::var(lam);
        if (i == 0) d += x(1);
        else if (i == n - 1) d -= x(r);
        else d += x(i + 1) - x(i);
        A[i][i][0] += d;
    }
    for (int i = 0; i + 1 < n; ++i) {
        A[i][i + 1][0] += rel_q(r, i + 1);
        A[i + 1][i][0] += Poly(-1);
    }
    A[0][n - 1][-1] += Poly(-1);
    A[n - 1][0][1] += rel_q(r, 0);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Poly det;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Entry prod{{0, Poly(inversions % 2 ? -1 : 1)}};
        for (int i = 0; i < n && !prod.empty(); ++i) {
            Entry next;
            for (const auto& [za, a] : prod)
                for (const auto& [zb, b] : A[i][perm[i]]) next[za + zb] += a * b;
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            prod = std::move(next);
        }
        auto it = prod.find(0);
        if (it != prod.end()) det += it->second;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::map<int, Poly> by_lambda;
    for (const auto& [m, c] : det.terms()) {
        Monomial rest = m;
        int k = rest.e[lam];
        rest.e[lam] = 0;
        by_lambda[k].add_term(rest, c);
    }
    if (by_lambda[n] != Poly(1) || !by_lambda[n - 1].is_zero())
        throw std::logic_error("typeA_relations: unexpected leading terms of the characteristic polynomial");
    std::vector<Relation> out;
    for (int k = 1; k <= r; ++k) out.push_back(make_relation(r, "H" + std::to_string(k), by_lambda[n - k - 1]));
    return out;
}

/// The two B2 relations, alpha_1 short.
inline std::vector<Relation> b2_relations() {
    const int n = 2;
    Poly q0 = rel_q(n, 0), q1 = rel_q(n, 1), q2 = rel_q(n, 2), x1 = rel_x(n, 1), x2 = rel_x(n, 2);
    Poly h1 = Poly(4) * x1 * x1 - Poly(4) * x1 * x2 + Poly(2) * x2 * x2 - Poly(2) * q0 - Poly(4) * q1 - Poly(2) * q2;
    Poly h2 = Poly(4) * x1.pow(2) * x2.pow(2) - Poly(4) * x1 * x2.pow(3) - Poly(4) * q0 * x1 * x2 + Poly(4) * q2 * x1 * x2 +
              x2.pow(4) + Poly(2) * q0 * x2.pow(2) - Poly(4) * q1 * x2.pow(2) - Poly(2) * q2 * x2.pow(2) + q0.pow(2) -
              Poly(2) * q0 * q2 + q2.pow(2);
    return {make_relation(n, "H1", h1), make_relation(n, "H2", h2)};
}

/// sum_{i,j} (alpha_i^v|alpha_j^v) x_i x_j - (theta^v|theta^v) q_0 - sum_i (alpha_i^v|alpha_i^v) q_i,
/// with the Killing form normalized by (theta|theta) = 2.
inline Relation quadratic_relation(const RootSystem& rs) {
    int n = rs.n;
    Poly p;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p += rel_x(n, i + 1) * rel_x(n, j + 1) * rs.killing_coroots[i][j];
    Rational tt = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) tt += rs.theta_dual[i] * rs.theta_dual[j] * rs.killing_coroots[i][j];
    p -= rel_q(n, 0) * tt;
    for (int i = 0; i < n; ++i) p -= rel_q(n, i + 1) * rs.killing_coroots[i][i];
    return make_relation(n, "Q", p);
}

/// Phi(R): x_i -> sigma_i, products by *_aff. Each x-monomial is evaluated as
/// Lambda-bar^M(1) in increasing and in decreasing index order, and the two must agree.
inline QClass evaluate_relation(QuantumAffine& Q, const Poly& R) {
    int n = Q.rank();
    if (!R.is_homogeneous(relation_weights(n))) throw std::invalid_argument("evaluate_relation: relation is not homogeneous");
    std::map<Monomial, Poly> by_x;
    for (const auto& [m, c] : R.terms()) {
        Monomial qm, xm;
        for (int v = 0; v < kMaxVars; ++v) {
            if (!m.e[v]) continue;
            if (v <= n) qm.e[v] = m.e[v];
            else if (v <= 2 * n) xm.e[v - n - 1] = m.e[v];
            else throw std::invalid_argument("evaluate_relation: variable outside q_0..q_n, x_1..x_n");
        }
        by_x[xm].add_term(qm, c);
    }
    QClass out;
    for (const auto& [xm, coef] : by_x) {
        QClass up = Q.lambda_bar_monomial(xm, Q.basis(0));
        QClass down = Q.basis(0);
        for (int i = n; i >= 1; --i)
            for (int k = 0; k < xm.e[i - 1]; ++k) down = Q.lambda_bar(i, down);
        if (up != down) throw std::logic_error("evaluate_relation: operator order changed the result");
        out.axpy(coef, up);
    }
    return out;
}

inline bool verify_relation(QuantumAffine& Q, const Poly& R) { return evaluate_relation(Q, R).is_zero(); }

/// The q := 0 part of R, with x_i -> omega_i, vanishes in H*(G/B).
inline bool classically_vanishes(const Bgg& B, const Poly& R) {
    int n = B.rank();
    std::vector<Poly> img;
    for (int j = 0; j <= n; ++j) img.push_back(Poly());
    for (int i = 1; i <= n; ++i) img.push_back(B.omega(i));
    return B.expand(R.substitute_all(img)).is_zero();
}

/// Monomials of weighted degree d in the relation ring of rank n.
inline std::vector<Monomial> relation_monomials(int n, int d) {
    auto w = relation_weights(n);
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == static_cast<int>(w.size())) {
            if (left == 0) out.push_back(m);
            return;
        }
        for (int e = 0; e * w[v] <= left; ++e) {
            m.e[v] = static_cast<std::uint8_t>(e);
            rec(v + 1, left - e * w[v]);
        }
        m.e[v] = 0;
    };
    rec(0, d);
    return out;
}

/// dim_Q of the degree-d part of Q[q, x] / <relations>.
inline int quotient_dimension(int n, const std::vector<Relation>& rels, int d) {
    auto monos = relation_monomials(n, d);
    std::map<Monomial, int> index;
    for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = static_cast<int>(k);
    IncrementalBasis basis(static_cast<int>(monos.size()));
    int ideal = 0;
    for (const auto& r : rels) {
        if (r.degree > d) continue;
        for (const auto& m : relation_monomials(n, d - r.degree)) {
            QVec v(monos.size(), 0);
            Poly shifted = r.poly.mul_monomial(m);
            for (const auto& [t, c] : shifted.terms()) v[index.at(t)] = c;
            if (basis.add(v)) ++ideal;
        }
    }
    return static_cast<int>(monos.size()) - ideal;
}

/// Generators and relations for QH*_aff(G/B) as far as they are constructed here.
struct Presentation {
    std::string type;
    int rank = 0;
    std::vector<std::string> generators;
    std::vector<Relation> relations;
    bool complete = false;
    std::string gap;
};

inline Presentation present_ring(const RootSystem& rs) {
    Presentation p;
    p.type = rs.name();
    p.rank = rs.n;
    for (int i = 1; i <= rs.n; ++i) p.generators.push_back("x" + std::to_string(i));
    if (rs.type == LieType::A) {
        p.relations = typeA_relations(rs.n + 1);
        p.complete = true;
    } else if (rs.type == LieType::B && rs.n == 2) {
        p.relations = b2_relations();
        p.complete = true;
    } else {
        p.relations = {quadratic_relation(rs)};
        p.gap = "conserved quantities of degree above 2 are not generated for type " + rs.name();
    }
    return p;
}

}  // namespace affqh
