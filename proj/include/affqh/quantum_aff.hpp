#pragma once

#include "affqh/affine_coh.hpp"
#include "affqh/bgg_finite.hpp"
#include "affqh/chevalley_roots.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace affqh {

/// Q[q]-linear combination of monomials in the commuting operators
/// Lambda-bar_1..Lambda-bar_n (Monomial variable i-1 stands for Lambda-bar_i).
using OperatorPoly = std::map<Monomial, Poly>;

/// QH*_aff(G/B) = H*(G/B) tensor Q[q_0..q_n] with the product *_aff. Classes are
/// QClass values keyed by finite Weyl group ids.
class QuantumAffine {
public:
    explicit QuantumAffine(const RootSystem& rs, bool reverse_monomials = false, std::size_t cap = 48)
        : ad_(affinize(rs)), B_(rs, 400, reverse_monomials), cap_(cap) {
        AffineWeyl W(ad_);
        pi_ = enumerate_chevalley_roots(W);
        int N = B_.weyl().size();
        lbar_.assign(ad_.n + 1, std::vector<std::optional<QClass>>(N));
        lifts_.assign(N, std::nullopt);
        star_.assign(N, std::vector<std::optional<QClass>>(N));
    }

    const AffineRootData& data() const { return ad_; }
    Bgg& bgg() { return B_; }
    const FiniteWeyl& weyl() const { return B_.weyl(); }
    int rank() const { return ad_.n; }
    const ChevalleyRootSet& chevalley_roots() const { return pi_; }
    QClass basis(int w) const { return QClass::basis(w); }

    /// Lambda-bar_i(sigma_w) = sigma_i sigma_w + sum_{alpha} <lambda_i - m_i lambda_0, alpha^v> q^{alpha^v} pi(D_{s_alpha})(sigma_w).
    const QClass& lambda_bar_basis(int i, int w) {
        if (i < 1 || i > rank()) throw std::invalid_argument("lambda_bar: index must be in 1..n");
        auto& slot = lbar_[i].at(w);
        if (slot) return *slot;
        QClass r = to_qclass(B_.divisor_times(i, w));
        for (const auto& a : pi_) {
            int coef = a.coroot[i] - ad_.c[i] * a.coroot[0];
            if (!coef) continue;
            FinCohClass d = B_.pi_D(a.word, FinCohClass::basis(w));
            if (d.is_zero()) continue;
            r.axpy(q_power(ad_, a.coroot, coef), to_qclass(d));
        }
        slot = std::move(r);
        return *slot;
    }
    QClass lambda_bar(int i, const QClass& a) {
        QClass r;
        for (const auto& [w, c] : a.t) r.axpy(c, lambda_bar_basis(i, w));
        return r;
    }
    QClass lambda_bar_monomial(const Monomial& m, QClass a) {
        for (int i = 1; i <= rank(); ++i)
            for (int k = 0; k < m.e[i - 1]; ++k) a = lambda_bar(i, a);
        return a;
    }
    QClass apply(const OperatorPoly& op, const QClass& a) {
        QClass r;
        for (const auto& [m, c] : op) r.axpy(c, lambda_bar_monomial(m, a));
        return r;
    }

    /// An operator L_w with L_w(1) = sigma_w, by induction on l(w).
    const OperatorPoly& lift(int w) {
        auto& slot = lifts_.at(w);
        if (slot) return *slot;
        OperatorPoly op;
        QClass t;
        for (const auto& [m, c] : B_.classical_expression(w)) {
            add_op(op, m, Poly(c));
            t.axpy(Poly(c), lambda_bar_monomial(m, basis(0)));
        }
        for (const auto& [v, c] : t.t) {
            Poly quantum = c;
            if (v == w) {
                if (c.constant_term() != 1) throw std::logic_error("lift: classical part does not reproduce sigma_w");
                quantum -= Poly(1);
            } else {
                quantum -= Poly(c.constant_term());
                if (c.constant_term() != 0) throw std::logic_error("lift: classical part has extra terms");
            }
            if (quantum.is_zero()) continue;
            if (weyl().length(v) >= weyl().length(w)) throw std::logic_error("lift: quantum correction does not lower degree");
            for (const auto& [m, c2] : lift(v)) add_op(op, m, -(quantum * c2));
        }
        slot = std::move(op);
        return *slot;
    }

    /// sigma_u *_aff b = L_u(b).
    QClass star(const QClass& a, const QClass& b) {
        QClass r;
        for (const auto& [u, c] : a.t) r.axpy(c, apply(lift(u), b));
        return r;
    }
    const QClass& star_basis(int u, int v) {
        auto& slot = star_.at(u).at(v);
        if (!slot) slot = apply(lift(u), basis(v));
        return *slot;
    }

    /// Q[q]-bilinear Poincare pairing.
    Poly pairing(const QClass& a, const QClass& b) const {
        Poly r;
        int w0 = weyl().w0();
        for (const auto& [u, c] : a.t) {
            auto it = b.t.find(weyl().mul(w0, u));
            if (it != b.t.end()) r += c * it->second;
        }
        return r;
    }

    /// The full table sigma_u *_aff sigma_v.
    std::vector<std::vector<QClass>> multiplication_table() {
        int N = weyl().size();
        if (static_cast<std::size_t>(N) > cap_)
            throw std::invalid_argument("multiplication table of " + ad_.name() + " exceeds the cap of " + std::to_string(cap_) + " Schubert classes");
        std::vector<std::vector<QClass>> t(N, std::vector<QClass>(N));
        for (int u = 0; u < N; ++u)
            for (int v = 0; v < N; ++v) t[u][v] = star_basis(u, v);
        return t;
    }

    /// Elements ordered by length, then by their reduced word.
    std::vector<int> ordered_elements() const {
        std::vector<int> out;
        for (const auto& layer : weyl().by_length()) {
            std::vector<int> l = layer;
            std::sort(l.begin(), l.end(), [&](int a, int b) { return weyl().str(a) < weyl().str(b); });
            out.insert(out.end(), l.begin(), l.end());
        }
        return out;
    }

private:
    static void add_op(OperatorPoly& op, const Monomial& m, const Poly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = op.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) op.erase(it);
        }
    }

    AffineRootData ad_;
    Bgg B_;
    std::size_t cap_;
    ChevalleyRootSet pi_;
    std::vector<std::vector<std::optional<QClass>>> lbar_;
    std::vector<std::optional<OperatorPoly>> lifts_;
    std::vector<std::vector<std::optional<QClass>>> star_;
};

/// Sets q_0 = 0 in every coefficient.
inline QClass specialize_q0(const QClass& a) {
    QClass r;
    for (const auto& [w, c] : a.t) r.add(w, c.set_zero(0));
    return r;
}

enum class TextStyle { Plain, Latex };

inline std::string schubert_name(const FiniteWeyl& W, int w, TextStyle style) {
    if (style == TextStyle::Plain) return "sigma_" + W.str(w);
    if (W.length(w) == 0) return "1";
    std::string s = "\\sigma_{";
    for (int i : W.word(w)) s += "s_" + std::to_string(i);
    return s + "}";
}

inline std::string poly_latex(const Poly& p, int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("q_" + std::to_string(i));
    std::string s = p.to_string(names);
    std::string out;
    for (char ch : s)
        if (ch != '*') out += ch;
    return out;
}

/// Human-readable form of a class, longest Schubert classes first.
inline std::string format_class(const FiniteWeyl& W, const QClass& a, int n, TextStyle style = TextStyle::Plain) {
    if (a.is_zero()) return "0";
    std::vector<int> keys;
    for (const auto& kv : a.t) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), [&](int x, int y) {
        if (W.length(x) != W.length(y)) return W.length(x) > W.length(y);
        return W.str(x) < W.str(y);
    });
    std::ostringstream os;
    bool first = true;
    for (int w : keys) {
        const Poly& c = a.t.at(w);
        std::string cs = style == TextStyle::Latex ? poly_latex(c, n) : c.to_string(q_names(n));
        bool simple = c.size() == 1;
        bool neg = simple && cs[0] == '-';
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        first = false;
        if (neg) cs = cs.substr(1);
        bool is_id = W.length(w) == 0;
        if (is_id) {
            os << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (cs != "1") os << (simple ? cs : "(" + cs + ")") << (style == TextStyle::Latex ? " " : "*");
        os << schubert_name(W, w, style);
    }
    return os.str();
}

inline std::string table_csv(QuantumAffine& Q) {
    auto tab = Q.multiplication_table();
    auto order = Q.ordered_elements();
    const auto& W = Q.weyl();
    std::ostringstream os;
    os << "u,v,product\n";
    for (int u : order)
        for (int v : order) os << W.str(u) << "," << W.str(v) << ",\"" << format_class(W, tab[u][v], Q.rank()) << "\"\n";
    return os.str();
}

inline std::string table_latex(QuantumAffine& Q) {
    auto tab = Q.multiplication_table();
    auto order = Q.ordered_elements();
    const auto& W = Q.weyl();
    std::ostringstream os;
    os << "\\begin{tabular}{c|" << std::string(order.size(), 'l') << "}\n$\\star$";
    for (int v : order) os << " & $" << schubert_name(W, v, TextStyle::Latex) << "$";
    os << " \\\\ \\hline\n";
    for (int u : order) {
        os << "$" << schubert_name(W, u, TextStyle::Latex) << "$";
        for (int v : order) os << " & $" << format_class(W, tab[u][v], Q.rank(), TextStyle::Latex) << "$";
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace affqh
