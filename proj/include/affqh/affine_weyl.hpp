#pragma once

#include "affqh/root_data.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affqh {

inline constexpr int kMaxRank = 8;

/// Element v * t_lambda of W x Q^v. M and Minv are the actions of v and v^{-1}
/// on the finite root lattice (simple-root basis, row-major, stride kMaxRank);
/// lam lies in the finite coroot lattice.
struct AffElt {
    std::array<std::int8_t, kMaxRank * kMaxRank> M{};
    std::array<std::int8_t, kMaxRank * kMaxRank> Minv{};
    std::array<std::int32_t, kMaxRank> lam{};

    bool operator==(const AffElt& o) const { return M == o.M && lam == o.lam; }
};

struct AffEltHash {
    std::size_t operator()(const AffElt& e) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : e.M) h = (h ^ static_cast<std::uint8_t>(x)) * 1099511628211ull;
        for (auto x : e.lam) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ull;
        return h;
    }
};

/// A Bruhat cover w -> w s_alpha with l(w s_alpha) = l(w) + 1.
struct Cover {
    int target;
    AffineRoot root;
};

/// Thrown when a computation would need elements longer than the configured truncation.
class TruncationError : public std::runtime_error {
public:
    TruncationError(int needed, const std::string& what)
        : std::runtime_error(what + " (needs truncation L >= " + std::to_string(needed) + ")"), needed_(needed) {}
    int needed() const { return needed_; }

private:
    int needed_;
};

/// The affine Weyl group of an untwisted affine root system. Elements are
/// interned and referred to by integer ids; the identity has id 0.
class AffineWeyl {
public:
    explicit AffineWeyl(AffineRootData ad) : ad_(std::move(ad)), n_(ad_.n) {
        const auto& rs = ad_.base;
        if (n_ > kMaxRank) throw std::invalid_argument("AffineWeyl: rank too large");
        for (int i = 0; i < n_; ++i) {
            Rational d = Rational(2) / rs.len2[i];
            dscale_[i] = static_cast<int>(d.get_num().get_si());
        }
        for (const auto& r : rs.positive_roots) pos_.push_back(r);
        AffElt id;
        for (int i = 0; i < n_; ++i) id.M[i * kMaxRank + i] = id.Minv[i * kMaxRank + i] = 1;
        intern(id);
        for (int i = 0; i <= n_; ++i) gens_.push_back(intern(reflection_elt(simple_affine_root(ad_, i))));
        for (const auto& b : pos_) {
            int S = 0;
            auto bv = rs.coroot(b);
            for (const auto& g : pos_) S += std::abs(rs.pair(g, bv));
            smin_ = smin_ == 0 ? S : std::min(smin_, S);
        }
    }

    const AffineRootData& data() const { return ad_; }
    int rank() const { return n_; }
    int identity() const { return 0; }
    int s(int i) const { return gens_.at(i); }
    std::size_t size() const { return elts_.size(); }
    const AffElt& elt(int a) const { return elts_.at(a); }

    int length(int a) const { return len_.at(a); }

    int intern(const AffElt& e) {
        auto it = index_.find(e);
        if (it != index_.end()) return it->second;
        int id = static_cast<int>(elts_.size());
        elts_.push_back(e);
        len_.push_back(compute_length(e));
        rmul_.emplace_back();
        rmul_.back().fill(-1);
        index_.emplace(e, id);
        return id;
    }

    int mul(int a, int b) { return intern(mul_elt(elts_.at(a), elts_.at(b))); }
    int inv(int a) { return intern(inv_elt(elts_.at(a))); }

    int rmul_s(int a, int i) {
        int& slot = rmul_.at(a)[i];
        if (slot < 0) {
            int r = mul(a, gens_[i]);
            rmul_[a][i] = r;
            return r;
        }
        return slot;
    }
    int lmul_s(int i, int a) { return mul(gens_.at(i), a); }

    /// w(k delta + beta) = (k - <beta, lambda>) delta + v(beta).
    AffineRoot apply(int a, const AffineRoot& r) const {
        const AffElt& e = elts_.at(a);
        AffineRoot out;
        out.k = r.k - pair_lam(r.beta, e.lam);
        out.beta = act(e.M, r.beta);
        return out;
    }

    bool right_descent(int a, int i) const { return !apply(a, simple_affine_root(ad_, i)).positive(); }
    bool left_descent(int a, int i) const {
        const AffElt& e = elts_.at(a);
        AffineRoot r = simple_affine_root(ad_, i);
        IVec b = act(e.Minv, r.beta);
        AffineRoot out{r.k + pair_lam(b, e.lam), b};
        return !out.positive();
    }

    /// The reflection s_alpha = s_beta t_{k beta^v} for alpha = k delta + beta.
    int reflection(const AffineRoot& alpha) {
        if (!alpha.real()) throw std::invalid_argument("reflection: imaginary root");
        return intern(reflection_elt(alpha));
    }

    /// The positive real root alpha with w = s_alpha; throws if w is not a reflection.
    AffineRoot reflection_root(int a) {
        const AffElt& e = elts_.at(a);
        const auto& rs = ad_.base;
        for (const auto& b : pos_) {
            AffElt r = reflection_elt(AffineRoot{0, b});
            if (r.M != e.M) continue;
            IVec bv = rs.coroot(b);
            int k = 0;
            bool found = false;
            for (int i = 0; i < n_; ++i) {
                if (bv[i] == 0) continue;
                if (e.lam[i] % bv[i] != 0) return not_reflection();
                k = e.lam[i] / bv[i];
                found = true;
                break;
            }
            if (!found) return not_reflection();
            for (int i = 0; i < n_; ++i)
                if (e.lam[i] != k * bv[i]) return not_reflection();
            AffineRoot alpha{k, b};
            return alpha.positive() ? alpha : -alpha;
        }
        return not_reflection();
    }

    /// Reduced word by repeatedly stripping the smallest right descent.
    IVec reduced_word(int a) {
        IVec w;
        while (len_.at(a) > 0) {
            int i = 0;
            while (!right_descent(a, i)) ++i;
            w.push_back(i);
            a = rmul_s(a, i);
        }
        return IVec(w.rbegin(), w.rend());
    }

    int from_word(const IVec& word) {
        int a = 0;
        for (int i : word) {
            if (i < 0 || i > n_) throw std::invalid_argument("generator index out of range: " + std::to_string(i));
            a = rmul_s(a, i);
        }
        return a;
    }

    std::string str(int a) {
        if (len_.at(a) == 0) return "id";
        std::string s;
        for (int i : reduced_word(a)) s += "s" + std::to_string(i);
        return s;
    }

    /// Parses "s0s1s2" (also "id", "e", "1" or ""); non-reduced words are accepted.
    int parse(const std::string& text) {
        if (text.empty() || text == "id" || text == "e" || text == "1") return 0;
        IVec word;
        std::size_t p = 0;
        while (p < text.size()) {
            if (text[p] != 's') throw std::invalid_argument("bad Weyl group word: '" + text + "'");
            ++p;
            if (p >= text.size() || !std::isdigit(static_cast<unsigned char>(text[p])))
                throw std::invalid_argument("bad Weyl group word: '" + text + "'");
            int i = text[p++] - '0';
            word.push_back(i);
        }
        return from_word(word);
    }

    /// v <= w in the Bruhat order, via the descent recursion.
    bool bruhat_leq(int v, int w) {
        while (true) {
            if (len_.at(v) > len_.at(w)) return false;
            if (len_.at(w) == 0) return v == 0;
            if (len_.at(v) == len_.at(w)) return v == w;
            int i = 0;
            while (!right_descent(w, i)) ++i;
            if (right_descent(v, i)) v = rmul_s(v, i);
            w = rmul_s(w, i);
        }
    }

    /// The Hecke (Demazure) product u . v.
    int hecke(int u, int v) {
        for (int i : reduced_word(v)) {
            int us = rmul_s(u, i);
            if (len_[us] > len_[u]) u = us;
        }
        return u;
    }
    int hecke_s(int u, int i) {
        int us = rmul_s(u, i);
        return len_[us] > len_[u] ? us : u;
    }

    /// Elements graded by length 0..L.
    const std::vector<std::vector<int>>& enumerate_up_to(int L) {
        if (graded_.empty()) graded_.push_back({0});
        while (static_cast<int>(graded_.size()) <= L) {
            int k = static_cast<int>(graded_.size());
            std::vector<int> next;
            std::vector<char> mark;
            for (int a : graded_[k - 1])
                for (int i = 0; i <= n_; ++i) {
                    int b = rmul_s(a, i);
                    if (len_[b] != k) continue;
                    if (static_cast<int>(mark.size()) <= b) mark.resize(elts_.size() + 1, 0);
                    if (mark[b]) continue;
                    mark[b] = 1;
                    next.push_back(b);
                }
            graded_.push_back(std::move(next));
        }
        return graded_;
    }

    /// Positive real roots grouped by level k = 0, 1, 2, ...; shell k contains all
    /// roots k delta + beta (for k = 0 only beta > 0).
    std::vector<AffineRoot> shell(int k) const {
        std::vector<AffineRoot> out;
        for (const auto& b : pos_) {
            out.push_back(AffineRoot{k, b});
            if (k > 0) out.push_back(-AffineRoot{-k, b});
        }
        return out;
    }

    /// Lower bound for l(s_alpha) over all real roots of level >= k (k >= 1).
    int shell_length_bound(int k) const { return k * smin_ - static_cast<int>(pos_.size()); }

    /// All (w s_alpha, alpha) with alpha > 0 real and l(w s_alpha) = l(w) + 1.
    const std::vector<Cover>& covers_up(int w) {
        auto it = covers_.find(w);
        if (it != covers_.end()) return it->second;
        std::vector<Cover> out;
        int L = len_.at(w);
        for (int k = 0;; ++k) {
            if (k >= 1 && shell_length_bound(k) > 2 * L + 1) break;
            for (const auto& alpha : shell(k)) {
                int t = mul(w, reflection(alpha));
                if (len_[t] == L + 1) out.push_back(Cover{t, alpha});
            }
        }
        return covers_.emplace(w, std::move(out)).first->second;
    }

    /// All (w s_alpha, alpha) with alpha > 0 real and l(w s_alpha) = l(w) - 1.
    std::vector<Cover> covers_down(int w) {
        std::vector<Cover> out;
        int L = len_.at(w);
        for (int k = 0;; ++k) {
            if (k >= 1 && shell_length_bound(k) > 2 * L) break;
            for (const auto& alpha : shell(k)) {
                int t = mul(w, reflection(alpha));
                if (len_[t] == L - 1) out.push_back(Cover{t, alpha});
            }
        }
        return out;
    }

    /// <beta, lambda> for beta in the root basis and lambda in the coroot basis.
    int pair_lam(const IVec& beta, const std::array<std::int32_t, kMaxRank>& lam) const {
        int s = 0;
        const auto& a = ad_.base.cartan;
        for (int i = 0; i < n_; ++i) {
            if (!lam[i]) continue;
            for (int j = 0; j < n_; ++j) s += lam[i] * a[i][j] * beta[j];
        }
        return s;
    }

    /// Length by the Iwahori-Matsumoto count over finite positive roots.
    int compute_length(const AffElt& e) const {
        int l = 0;
        for (const auto& b : pos_) {
            int x = pair_lam(b, e.lam);
            if (!RootSystem::is_positive(act(e.M, b))) x += 1;
            l += std::abs(x);
        }
        return l;
    }

private:
    AffineRoot not_reflection() const { throw std::invalid_argument("reflection_root: element is not a reflection"); }

    IVec act(const std::array<std::int8_t, kMaxRank * kMaxRank>& M, const IVec& b) const {
        IVec r(n_, 0);
        for (int i = 0; i < n_; ++i) {
            int s = 0;
            for (int j = 0; j < n_; ++j) s += M[i * kMaxRank + j] * b[j];
            r[i] = s;
        }
        return r;
    }

    // Coroot action of the finite element with root matrix M: D^{-1} M D.
    std::array<std::int32_t, kMaxRank> act_coroot(const std::array<std::int8_t, kMaxRank * kMaxRank>& M,
                                                  const std::array<std::int32_t, kMaxRank>& lam) const {
        std::array<std::int32_t, kMaxRank> r{};
        for (int i = 0; i < n_; ++i) {
            int s = 0;
            for (int j = 0; j < n_; ++j) s += M[i * kMaxRank + j] * dscale_[j] * lam[j];
            if (s % dscale_[i] != 0) throw std::logic_error("coroot action: non-integral result");
            r[i] = s / dscale_[i];
        }
        return r;
    }

    AffElt mul_elt(const AffElt& a, const AffElt& b) const {
        AffElt r;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                int s = 0, t = 0;
                for (int k = 0; k < n_; ++k) {
                    s += a.M[i * kMaxRank + k] * b.M[k * kMaxRank + j];
                    t += b.Minv[i * kMaxRank + k] * a.Minv[k * kMaxRank + j];
                }
                r.M[i * kMaxRank + j] = static_cast<std::int8_t>(s);
                r.Minv[i * kMaxRank + j] = static_cast<std::int8_t>(t);
            }
        // (v1 t_l1)(v2 t_l2) = v1 v2 t_{v2^{-1} l1 + l2}
        auto l = act_coroot(b.Minv, a.lam);
        for (int i = 0; i < n_; ++i) r.lam[i] = l[i] + b.lam[i];
        return r;
    }

    AffElt inv_elt(const AffElt& a) const {
        AffElt r;
        r.M = a.Minv;
        r.Minv = a.M;
        auto l = act_coroot(a.M, a.lam);
        for (int i = 0; i < n_; ++i) r.lam[i] = -l[i];
        return r;
    }

    AffElt reflection_elt(const AffineRoot& alpha) const {
        const auto& rs = ad_.base;
        IVec bv = rs.coroot(alpha.beta);
        AffElt r;
        for (int j = 0; j < n_; ++j) {
            IVec e(n_, 0);
            e[j] = 1;
            int p = rs.pair(e, bv);
            for (int i = 0; i < n_; ++i) {
                int x = (i == j ? 1 : 0) - p * alpha.beta[i];
                r.M[i * kMaxRank + j] = r.Minv[i * kMaxRank + j] = static_cast<std::int8_t>(x);
            }
        }
        for (int i = 0; i < n_; ++i) r.lam[i] = alpha.k * bv[i];
        return r;
    }

    AffineRootData ad_;
    int n_;
    std::array<int, kMaxRank> dscale_{};
    std::vector<IVec> pos_;
    int smin_ = 0;
    std::vector<int> gens_;
    std::vector<AffElt> elts_;
    std::vector<int> len_;
    std::vector<std::array<int, kMaxRank + 1>> rmul_;
    std::unordered_map<AffElt, int, AffEltHash> index_;
    std::vector<std::vector<int>> graded_;
    std::unordered_map<int, std::vector<Cover>> covers_;
};

}  // namespace affqh
