#pragma once

#include "affqh/bgg_finite.hpp"
#include "affqh/chevalley_roots.hpp"
#include "affqh/linalg.hpp"
#include "affqh/lincomb.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affqh {

/// q^d as a polynomial in q_0..q_n (Poly variables 0..n).
inline Poly q_power(const AffineRootData& ad, const CorootVec& d, const Rational& c = 1) {
    return Poly::term(ad.q_monomial(d), c);
}

inline QClass reduce_mod_monomial(const QClass& a, const Monomial& m) {
    QClass r;
    for (const auto& [k, c] : a.t) r.add(k, c.reduce_mod_monomial(m));
    return r;
}

inline std::vector<std::string> q_names(int n) {
    std::vector<std::string> v;
    for (int i = 0; i <= n; ++i) v.push_back("q" + std::to_string(i));
    return v;
}

/// Monomials of total degree d in the variables 0..nvars-1.
inline std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    Monomial m;
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            m.e[var] = static_cast<std::uint8_t>(left);
            out.push_back(m);
            m.e[var] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            m.e[var] = static_cast<std::uint8_t>(e);
            rec(var + 1, left - e);
        }
        m.e[var] = 0;
    };
    if (nvars > 0) rec(0, d);
    return out;
}

/// Truncated H*(Fl_G) with coefficients in Q[q_0..q_n], in the Schubert basis
/// eps_w indexed by AffineWeyl ids. Classes are exact for l(w) <= L; any
/// operation that would need a longer element throws TruncationError.
class AffineCohomology {
public:
    AffineCohomology(AffineRootData ad, int L) : W_(std::move(ad)), L_(L) {
        if (L < 0) throw std::invalid_argument("truncation must be nonnegative");
        pi_ = enumerate_chevalley_roots(W_);
    }

    AffineWeyl& weyl() { return W_; }
    const AffineRootData& data() const { return W_.data(); }
    int rank() const { return W_.rank(); }
    int truncation() const { return L_; }
    const ChevalleyRootSet& chevalley_roots() const { return pi_; }

    QClass basis(int w) const { return QClass::basis(w); }

    /// eps_i . eps_w by the affine Chevalley formula.
    QClass chevalley(int i, int w) {
        need(W_.length(w) + 1, "affine Chevalley product");
        QClass r;
        for (const auto& c : W_.covers_up(w)) {
            int coef = c.root.coroot(data()).at(i);
            if (coef) r.add(c.target, Poly(coef));
        }
        return r;
    }
    QClass divisor_times(int i, const QClass& a) {
        QClass r;
        for (const auto& [w, c] : a.t) r.axpy(c, chevalley(i, w));
        return r;
    }

    /// D_i(eps_v) = eps_{v s_i} when l(v s_i) < l(v), else 0.
    QClass D(int i, const QClass& a) {
        QClass r;
        for (const auto& [w, c] : a.t)
            if (W_.right_descent(w, i)) r.add(W_.rmul_s(w, i), c);
        return r;
    }
    /// D_{i_1} ... D_{i_k} with the rightmost operator applied first.
    QClass D_word(const IVec& word, QClass a) {
        for (auto it = word.rbegin(); it != word.rend() && !a.is_zero(); ++it) a = D(*it, a);
        return a;
    }
    QClass D_elt(int w, const QClass& a) { return D_word(W_.reduced_word(w), a); }

    /// Lambda_i(eps_u) = eps_i eps_u + sum_{alpha} <lambda_i, alpha^v> q^{alpha^v} D_{s_alpha}(eps_u).
    QClass lambda(int i, const QClass& a) {
        if (i < 0 || i > rank()) throw std::invalid_argument("lambda: index out of range");
        QClass r;
        for (const auto& [u, c] : a.t) {
            r.axpy(c, chevalley(i, u));
            for (const auto& alpha : pi_) {
                int coef = alpha.coroot[i];
                if (!coef) continue;
                QClass d = D_s_alpha(alpha, u);
                if (d.is_zero()) continue;
                r.axpy(c * q_power(data(), alpha.coroot, coef), d);
            }
        }
        return r;
    }

    /// (Lambda_i - m_i Lambda_0)(a) for i >= 1.
    QClass modified_lambda(int i, const QClass& a) {
        if (i < 1 || i > rank()) throw std::invalid_argument("modified_lambda: index must be in 1..n");
        QClass r = lambda(i, a);
        r.axpy(Poly(-data().c[i]), lambda(0, a));
        return r;
    }

    /// e_1^* of a finite class, through its expression as a polynomial in the
    /// divisors sigma_i and sigma_i -> eps_i - m_i eps_0.
    QClass e1_pullback(Bgg& B, const FinCohClass& a) {
        QClass r;
        for (const auto& [w, c] : a.t)
            for (const auto& [m, coef] : B.classical_expression(w)) r.axpy(Poly(c * coef), e1_monomial(m));
        return r;
    }

    /// The product eps^M (M an exponent vector over eps_0..eps_n) applied to eps_id.
    const QClass& divisor_monomial(const Monomial& m) {
        auto it = eps_mono_.find(m);
        if (it != eps_mono_.end()) return it->second;
        QClass r;
        if (m.is_one()) {
            r = basis(W_.identity());
        } else {
            int i = 0;
            while (!m.e[i]) ++i;
            r = divisor_times(i, divisor_monomial(m / Monomial::var(i)));
        }
        return eps_mono_.emplace(m, std::move(r)).first->second;
    }

    /// Lambda^M(a), applying the highest index first.
    QClass lambda_monomial(const Monomial& m, QClass a) {
        for (int i = rank(); i >= 0; --i)
            for (int k = 0; k < m.e[i]; ++k) a = lambda(i, a);
        return a;
    }

    /// Writes a q-free class as a Q-combination of divisor monomials in
    /// eps_0..eps_n; returns nullopt when it lies outside their span.
    std::optional<std::vector<std::pair<Monomial, Rational>>> express_in_divisors(const FinCohClass& a) {
        std::vector<std::pair<Monomial, Rational>> out;
        std::map<int, FinCohClass> by_deg;
        for (const auto& [w, c] : a.t) by_deg[W_.length(w)].add(w, c);
        for (const auto& [deg, piece] : by_deg) {
            auto monos = monomials_of_degree(rank() + 1, deg);
            std::map<int, int> row;
            std::vector<QClass> cols;
            for (const auto& m : monos) {
                cols.push_back(divisor_monomial(m));
                for (const auto& kv : cols.back().t) row.emplace(kv.first, 0);
            }
            for (const auto& kv : piece.t) row.emplace(kv.first, 0);
            int k = 0;
            for (auto& kv : row) kv.second = k++;
            QMatrix A(row.size(), QVec(monos.size(), 0));
            QVec b(row.size(), 0);
            for (std::size_t j = 0; j < monos.size(); ++j)
                for (const auto& [w, c] : cols[j].t) A[row[w]][j] = c.constant_term();
            for (const auto& [w, c] : piece.t) b[row[w]] = c;
            auto x = solve(A, b);
            if (!x) return std::nullopt;
            for (std::size_t j = 0; j < monos.size(); ++j)
                if ((*x)[j] != 0) out.emplace_back(monos[j], (*x)[j]);
        }
        return out;
    }

    /// a *_# b = Lambda_a Lambda_b (1) modulo q^c, for a, b in the Q[q]-span of
    /// divisor monomials.
    QClass qsharp_product(const QClass& a, const QClass& b) {
        QClass x = apply_as_operator(b, basis(W_.identity()));
        x = reduce_mod_monomial(x, data().qc());
        return reduce_mod_monomial(apply_as_operator(a, x), data().qc());
    }

private:
    void need(int len, const std::string& what) const {
        if (len > L_) throw TruncationError(len, what);
    }

    // D_{s_alpha}(eps_u), computed by composing D_i along a reduced word of s_alpha
    // and by the length criterion; the two must agree.
    QClass D_s_alpha(const ChevalleyRoot& alpha, int u) {
        QClass by_word = D_word(alpha.word, basis(u));
        QClass by_length;
        int t = W_.mul(u, alpha.reflection);
        if (W_.length(t) == W_.length(u) - alpha.length) by_length = basis(t);
        if (by_word != by_length) throw std::logic_error("D_{s_alpha}: word and length computations disagree");
        return by_length;
    }

    const QClass& e1_monomial(const Monomial& m) {
        auto it = e1_mono_.find(m);
        if (it != e1_mono_.end()) return it->second;
        QClass r;
        if (m.is_one()) {
            r = basis(W_.identity());
        } else {
            int i = 0;
            while (!m.e[i]) ++i;
            const QClass& prev = e1_monomial(m / Monomial::var(i));
            r = divisor_times(i + 1, prev);
            r.axpy(Poly(-data().c[i + 1]), divisor_times(0, prev));
        }
        return e1_mono_.emplace(m, std::move(r)).first->second;
    }

    // Applies the operator obtained from a by replacing eps-monomials with Lambda-monomials.
    QClass apply_as_operator(const QClass& a, const QClass& x) {
        std::map<Monomial, FinCohClass> by_q;
        for (const auto& [w, c] : a.t)
            for (const auto& [qm, qc] : c.terms()) by_q[qm].add(w, qc);
        QClass r;
        for (const auto& [qm, part] : by_q) {
            auto expr = express_in_divisors(part);
            if (!expr) throw std::invalid_argument("qsharp_product: input is not in the span of divisor monomials");
            for (const auto& [m, coef] : *expr) r.axpy(Poly::term(qm, coef), lambda_monomial(m, x));
        }
        return r;
    }

    AffineWeyl W_;
    int L_;
    ChevalleyRootSet pi_;
    std::map<Monomial, QClass> eps_mono_, e1_mono_;
};

}  // namespace affqh
