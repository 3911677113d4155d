#pragma once

#include "affqh/affine_weyl.hpp"
#include "affqh/lincomb.hpp"
#include "affqh/linalg.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affqh {

/// The finite Weyl group, fully enumerated. Generators are numbered 1..n and
/// elements are referred to by ids; the identity has id 0.
class FiniteWeyl {
public:
    using Mat = std::array<std::int8_t, kMaxRank * kMaxRank>;

    explicit FiniteWeyl(const RootSystem& rs, std::size_t cap = 2000) : rs_(rs), n_(rs.n) {
        Mat id{};
        for (int i = 0; i < n_; ++i) id[i * kMaxRank + i] = 1;
        std::vector<Mat> gens;
        for (int i = 0; i < n_; ++i) {
            Mat s{};
            for (int j = 0; j < n_; ++j)
                for (int r = 0; r < n_; ++r) s[r * kMaxRank + j] = static_cast<std::int8_t>((r == j) - (r == i ? rs.cartan[i][j] : 0));
            gens.push_back(s);
        }
        add(id, -1, 0);
        for (std::size_t k = 0; k < elts_.size(); ++k) {
            for (int i = 1; i <= n_; ++i) {
                Mat m = mul_mat(elts_[k], gens[i - 1]);
                auto it = index_.find(key(m));
                int id2;
                if (it == index_.end()) {
                    if (elts_.size() >= cap) throw std::invalid_argument("finite Weyl group of " + rs.name() + " exceeds the enumeration cap");
                    id2 = add(m, static_cast<int>(k), i);
                } else {
                    id2 = it->second;
                }
                rmul_[k][i] = id2;
            }
        }
        for (std::size_t k = 0; k < elts_.size(); ++k) {
            if (static_cast<int>(by_length_.size()) <= len_[k]) by_length_.resize(len_[k] + 1);
            by_length_[len_[k]].push_back(static_cast<int>(k));
        }
        w0_ = by_length_.back().at(0);
        inv_.assign(elts_.size(), -1);
        lmul_.assign(elts_.size(), {});
        for (std::size_t k = 0; k < elts_.size(); ++k) {
            const auto& w = words_[k];
            inv_[k] = from_word(IVec(w.rbegin(), w.rend()));
        }
        for (std::size_t k = 0; k < elts_.size(); ++k)
            for (int i = 1; i <= n_; ++i) lmul_[k][i] = inv_[rmul_[inv_[k]][i]];
        for (const auto& b : rs.positive_roots) {
            reflections_.push_back(from_word(reflection_word(b)));
        }
    }

    const RootSystem& roots() const { return rs_; }
    int rank() const { return n_; }
    int size() const { return static_cast<int>(elts_.size()); }
    int identity() const { return 0; }
    int w0() const { return w0_; }
    int length(int v) const { return len_.at(v); }
    int rmul(int v, int i) const { return rmul_.at(v)[i]; }
    int lmul(int i, int v) const { return lmul_.at(v)[i]; }
    int inv(int v) const { return inv_.at(v); }
    int mul(int a, int b) const {
        for (int i : words_.at(b)) a = rmul_[a][i];
        return a;
    }
    bool right_descent(int v, int i) const { return len_[rmul_[v][i]] < len_[v]; }
    bool left_descent(int v, int i) const { return len_[lmul_[v][i]] < len_[v]; }
    const IVec& word(int v) const { return words_.at(v); }
    const std::vector<std::vector<int>>& by_length() const { return by_length_; }
    /// s_beta for the k-th positive root.
    int reflection_of(int k) const { return reflections_.at(k); }
    int reflection(const IVec& beta) const {
        int k = rs_.positive_index(beta);
        if (k < 0) {
            IVec nb = beta;
            for (auto& x : nb) x = -x;
            k = rs_.positive_index(nb);
        }
        if (k < 0) throw std::invalid_argument("reflection: not a root");
        return reflections_[k];
    }

    IVec apply(int v, const IVec& beta) const {
        const Mat& m = elts_.at(v);
        IVec r(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i] += m[i * kMaxRank + j] * beta[j];
        return r;
    }

    int from_word(const IVec& w) const {
        int a = 0;
        for (int i : w) {
            if (i < 1 || i > n_) throw std::invalid_argument("finite generator index out of range: " + std::to_string(i));
            a = rmul_[a][i];
        }
        return a;
    }

    std::string str(int v) const {
        if (len_.at(v) == 0) return "id";
        std::string s;
        for (int i : words_[v]) s += "s" + std::to_string(i);
        return s;
    }
    int parse(const std::string& text) const {
        if (text.empty() || text == "id" || text == "e" || text == "1") return 0;
        IVec w;
        std::size_t p = 0;
        while (p < text.size()) {
            if (text[p] != 's' || p + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p + 1])))
                throw std::invalid_argument("bad Weyl group word: '" + text + "'");
            w.push_back(text[p + 1] - '0');
            p += 2;
        }
        return from_word(w);
    }

private:
    static std::string key(const Mat& m) { return std::string(reinterpret_cast<const char*>(m.data()), m.size()); }

    Mat mul_mat(const Mat& a, const Mat& b) const {
        Mat r{};
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int s = 0;
                for (int k = 0; k < n_; ++k) s += a[i * kMaxRank + k] * b[k * kMaxRank + j];
                r[i * kMaxRank + j] = static_cast<std::int8_t>(s);
            }
        return r;
    }

    int add(const Mat& m, int parent, int letter) {
        int id = static_cast<int>(elts_.size());
        elts_.push_back(m);
        index_.emplace(key(m), id);
        rmul_.emplace_back();
        rmul_.back().fill(-1);
        if (parent < 0) {
            words_.push_back({});
            len_.push_back(0);
        } else {
            IVec w = words_[parent];
            w.push_back(letter);
            words_.push_back(std::move(w));
            len_.push_back(len_[parent] + 1);
        }
        return id;
    }

    // A word for s_beta: conjugate down to a simple root.
    IVec reflection_word(const IVec& beta) const {
        for (int i = 0; i < n_; ++i) {
            bool simple = true;
            for (int j = 0; j < n_; ++j)
                if (beta[j] != (i == j)) simple = false;
            if (simple) return {i + 1};
        }
        for (int i = 0; i < n_; ++i) {
            IVec e(n_, 0);
            e[i] = 1;
            if (rs_.pair(beta, rs_.coroot(e)) <= 0) continue;
            IVec b2 = beta;
            int p = rs_.pair(beta, rs_.coroot(e));
            b2[i] -= p;
            IVec inner = reflection_word(b2);
            IVec out{i + 1};
            out.insert(out.end(), inner.begin(), inner.end());
            out.push_back(i + 1);
            return out;
        }
        throw std::logic_error("reflection_word: not a positive root");
    }

    RootSystem rs_;
    int n_;
    std::vector<Mat> elts_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::array<int, kMaxRank + 1>> rmul_, lmul_;
    std::vector<IVec> words_;
    std::vector<int> len_, inv_, reflections_;
    std::vector<std::vector<int>> by_length_;
    int w0_ = 0;
};

/// Cohomology of G/B through polynomial representatives in the fundamental
/// weights omega_1..omega_n (Poly variables 0..n-1) and BGG divided differences.
class Bgg {
public:
    /// With reverse_monomials the classical expressions prefer omega_1 over omega_n
    /// instead of the default omega_n over omega_1.
    explicit Bgg(const RootSystem& rs, std::size_t cap = 400, bool reverse_monomials = false)
        : W_(rs), n_(rs.n), reverse_(reverse_monomials) {
        if (static_cast<std::size_t>(W_.size()) > cap)
            throw std::invalid_argument("finite cohomology of " + rs.name() + " exceeds the desk-scale cap");
        int top = W_.length(W_.w0());
        reps_.assign(W_.size(), Poly());
        have_rep_.assign(W_.size(), false);
        Poly pt(Rational(1, W_.size()));
        for (const auto& b : rs.positive_roots) pt *= root_poly(b);
        reps_[W_.w0()] = pt;
        have_rep_[W_.w0()] = true;
        for (int k = top; k >= 1; --k)
            for (int v : W_.by_length()[k])
                for (int i = 1; i <= n_; ++i) {
                    if (!W_.right_descent(v, i)) continue;
                    int u = W_.rmul(v, i);
                    if (have_rep_[u]) continue;
                    reps_[u] = divided_difference(simple(i), reps_[v]);
                    have_rep_[u] = true;
                }
        neg_theta_.assign(W_.size(), std::nullopt);
        divisor_.assign(n_ + 1, std::vector<std::optional<FinCohClass>>(W_.size()));
    }

    const FiniteWeyl& weyl() const { return W_; }
    const RootSystem& roots() const { return W_.roots(); }
    int rank() const { return n_; }
    int top_degree() const { return W_.length(W_.w0()); }

    IVec simple(int i) const {
        IVec e(n_, 0);
        e.at(i - 1) = 1;
        return e;
    }
    IVec neg_theta() const {
        IVec t = roots().theta;
        for (auto& x : t) x = -x;
        return t;
    }
    Poly omega(int i) const { return Poly::var(i - 1); }
    /// A root written in the basis of fundamental weights.
    Poly root_poly(const IVec& beta) const {
        IVec w = roots().in_weights(beta);
        Poly p;
        for (int i = 0; i < n_; ++i) p.add_term(Monomial::var(i), w[i]);
        return p;
    }

    /// s_beta(f) with s_beta(omega_j) = omega_j - <omega_j, beta^v> beta.
    Poly reflect(const IVec& beta, const Poly& f) const {
        IVec bv = roots().coroot(beta);
        Poly b = root_poly(beta);
        std::vector<Poly> img;
        for (int j = 0; j < n_; ++j) img.push_back(Poly::var(j) - b * Rational(bv[j]));
        return f.substitute_all(img);
    }

    /// (f - s_beta f) / beta, with the division checked to be exact.
    Poly divided_difference(const IVec& beta, const Poly& f) const {
        if (std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; }))
            throw std::invalid_argument("divided_difference: zero root");
        Poly num = f - reflect(beta, f);
        if (num.is_zero()) return num;
        return num.exact_div(root_poly(beta));
    }

    const Poly& schubert_rep(int w) const { return reps_.at(w); }

    Poly rep(const FinCohClass& a) const {
        Poly p;
        for (const auto& [w, c] : a.t) p += reps_.at(w) * c;
        return p;
    }

    /// Schubert expansion: the coefficient of sigma_w is the constant term of d_w(f).
    FinCohClass expand(const Poly& f) const {
        std::map<int, Poly> parts;
        for (const auto& [m, c] : f.terms()) parts[m.degree()].add_term(m, c);
        FinCohClass out;
        int top = top_degree();
        for (auto& [d, g] : parts) {
            if (d > top) continue;
            if (d == 0) {
                out.add(0, g.constant_term());
                continue;
            }
            std::unordered_map<int, Poly> prev{{0, g}};
            for (int k = 1; k <= d; ++k) {
                std::unordered_map<int, Poly> cur;
                for (int v : W_.by_length()[k]) {
                    int j = 1;
                    while (!W_.left_descent(v, j)) ++j;
                    auto it = prev.find(W_.lmul(j, v));
                    if (it == prev.end()) continue;
                    Poly h = divided_difference(simple(j), it->second);
                    if (!h.is_zero()) cur.emplace(v, std::move(h));
                }
                prev = std::move(cur);
            }
            for (const auto& [v, h] : prev) {
                if (!h.is_constant()) throw std::logic_error("expand: non-constant top derivative");
                out.add(v, h.constant_term());
            }
        }
        return out;
    }

    FinCohClass cup(const FinCohClass& a, const FinCohClass& b) const { return expand(rep(a) * rep(b)); }

    Rational pairing(const FinCohClass& a, const FinCohClass& b) const {
        return cup(a, b).coeff(W_.w0());
    }

    /// sigma_i . sigma_w, cached.
    const FinCohClass& divisor_times(int i, int w) {
        auto& slot = divisor_.at(i).at(w);
        if (!slot) slot = expand(omega(i) * reps_.at(w));
        return *slot;
    }

    /// d_i on Schubert classes: sigma_w -> sigma_{w s_i} when l(w s_i) < l(w).
    FinCohClass partial_simple(int i, const FinCohClass& a) const {
        FinCohClass r;
        for (const auto& [w, c] : a.t)
            if (W_.right_descent(w, i)) r.add(W_.rmul(w, i), c);
        return r;
    }

    /// d_{-theta} on Schubert classes, via representatives.
    FinCohClass partial_neg_theta(const FinCohClass& a) {
        FinCohClass r;
        for (const auto& [w, c] : a.t) {
            auto& slot = neg_theta_.at(w);
            if (!slot) slot = expand(divided_difference(neg_theta(), reps_[w]));
            r.axpy(c, *slot);
        }
        return r;
    }

    /// d_beta for an arbitrary root beta, on classes.
    FinCohClass partial_root(const IVec& beta, const FinCohClass& a) const {
        return expand(divided_difference(beta, rep(a)));
    }

    /// pi(D_w) for an affine word: letter 0 acts as d_{-theta}, letter i as d_i;
    /// the rightmost letter acts first.
    FinCohClass pi_D(const IVec& affine_word, FinCohClass a) {
        for (auto it = affine_word.rbegin(); it != affine_word.rend() && !a.is_zero(); ++it)
            a = *it == 0 ? partial_neg_theta(a) : partial_simple(*it, a);
        return a;
    }

    /// Monomials of degree d in omega_1..omega_n, ordered by exponent of omega_n
    /// first, then omega_{n-1}, ..., each descending.
    std::vector<Monomial> monomials(int d) const {
        std::vector<Monomial> out;
        Monomial m;
        std::function<void(int, int)> rec = [&](int var, int left) {
            if (var < 0) {
                if (left == 0) out.push_back(m);
                return;
            }
            for (int e = left; e >= 0; --e) {
                m.e[var] = static_cast<std::uint8_t>(e);
                rec(var - 1, left - e);
            }
            m.e[var] = 0;
        };
        rec(n_ - 1, d);
        if (reverse_)
            for (auto& mm : out) std::reverse(mm.e.begin(), mm.e.begin() + n_);
        return out;
    }

    /// sigma_w as a Q-combination of monomials in the divisor classes, using the
    /// first spanning monomials in the order above.
    const std::vector<std::pair<Monomial, Rational>>& classical_expression(int w) {
        if (classical_.empty()) build_classical();
        return classical_.at(w);
    }

private:
    void build_classical() {
        classical_.assign(W_.size(), {});
        for (int d = 0; d <= top_degree(); ++d) {
            const auto& layer = W_.by_length()[d];
            int dim = static_cast<int>(layer.size());
            std::map<int, int> pos;
            for (int k = 0; k < dim; ++k) pos[layer[k]] = k;
            IncrementalBasis basis(dim);
            std::vector<Monomial> chosen;
            std::vector<QVec> cols;
            for (const auto& m : monomials(d)) {
                if (basis.size() == dim) break;
                QVec v(dim, 0);
                for (const auto& [w, c] : expand(Poly::term(m, 1)).t) v[pos.at(w)] = c;
                if (basis.add(v)) {
                    chosen.push_back(m);
                    cols.push_back(v);
                }
            }
            if (basis.size() != dim) throw std::logic_error("classical_expression: divisor monomials do not span");
            QMatrix B(dim, QVec(dim));
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) B[r][c] = cols[c][r];
            QMatrix Bi = inverse(B);
            for (int k = 0; k < dim; ++k) {
                auto& expr = classical_[layer[k]];
                for (int c = 0; c < dim; ++c)
                    if (Bi[c][k] != 0) expr.emplace_back(chosen[c], Bi[c][k]);
            }
        }
    }

    FiniteWeyl W_;
    int n_;
    bool reverse_ = false;
    std::vector<Poly> reps_;
    std::vector<bool> have_rep_;
    std::vector<std::optional<FinCohClass>> neg_theta_;
    std::vector<std::vector<std::optional<FinCohClass>>> divisor_;
    std::vector<std::vector<std::pair<Monomial, Rational>>> classical_;
};

}  // namespace affqh
