#pragma once

#include "affqh/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace affqh {

using IVec = std::vector<int>;
using IMat = std::vector<IVec>;
using QMat = std::vector<std::vector<Rational>>;

enum class LieType { A, B, C, D, E, F, G };

inline char type_letter(LieType t) { return "ABCDEFG"[static_cast<int>(t)]; }

/// A curve degree / coroot / q-exponent in the basis (alpha_0^v, ..., alpha_n^v).
using CorootVec = IVec;

inline int ht(const CorootVec& d) { return std::accumulate(d.begin(), d.end(), 0); }

/// Componentwise partial order on coroot vectors.
inline bool leq(const CorootVec& a, const CorootVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline bool lt(const CorootVec& a, const CorootVec& b) { return leq(a, b) && a != b; }
inline bool effective(const CorootVec& d) {
    return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}
inline CorootVec operator+(CorootVec a, const CorootVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
inline CorootVec operator-(CorootVec a, const CorootVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline std::string vec_str(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

/// Finite reduced root system of type A..G in Bourbaki numbering, except that
/// B2 puts the short simple root first (alpha_1 short, alpha_2 long).
struct RootSystem {
    LieType type{};
    int n = 0;
    /// cartan[i][j] = <alpha_j, alpha_i^v>.
    IMat cartan;
    /// Squared lengths (alpha_i|alpha_i), long roots have length 2.
    std::vector<Rational> len2;
    /// (alpha_i|alpha_j) and (alpha_i^v|alpha_j^v).
    QMat killing_roots, killing_coroots;
    /// Positive roots in the simple-root basis sorted by height, and their coroots.
    IMat positive_roots, positive_coroots;
    IVec theta, theta_dual, marks;

    std::string name() const { return std::string(1, type_letter(type)) + std::to_string(n); }

    /// <beta, mu> for beta in the root basis and mu in the coroot basis.
    int pair(const IVec& beta, const IVec& mu) const {
        int s = 0;
        for (int i = 0; i < n; ++i) {
            if (!mu[i]) continue;
            for (int j = 0; j < n; ++j) s += mu[i] * cartan[i][j] * beta[j];
        }
        return s;
    }

    Rational norm2(const IVec& beta) const {
        Rational s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (beta[i] && beta[j]) s += beta[i] * beta[j] * killing_roots[i][j];
        return s;
    }

    /// beta^v = 2 beta / (beta|beta), expressed in simple coroots.
    IVec coroot(const IVec& beta) const {
        Rational b2 = norm2(beta);
        if (b2 == 0) throw std::invalid_argument("coroot of the zero vector");
        IVec r(n);
        for (int j = 0; j < n; ++j) {
            Rational x = beta[j] * len2[j] / b2;
            if (x.get_den() != 1) throw std::logic_error("coroot: non-integral coordinate");
            r[j] = static_cast<int>(x.get_num().get_si());
        }
        return r;
    }

    /// 2/(beta|beta); an integer in {1,2,3}.
    int coroot_scale(const IVec& beta) const {
        Rational x = Rational(2) / norm2(beta);
        return static_cast<int>(x.get_num().get_si());
    }

    /// Index of beta among the positive roots, or -1.
    int positive_index(const IVec& beta) const {
        auto it = root_index_.find(beta);
        return it == root_index_.end() ? -1 : it->second;
    }
    bool is_root(const IVec& beta) const {
        if (positive_index(beta) >= 0) return true;
        IVec neg(beta.size());
        for (std::size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
        return positive_index(neg) >= 0;
    }
    static bool is_positive(const IVec& beta) {
        bool any = false;
        for (int x : beta) {
            if (x < 0) return false;
            if (x > 0) any = true;
        }
        return any;
    }
    /// beta in the basis of fundamental weights: column j of the Cartan matrix per alpha_j.
    IVec in_weights(const IVec& beta) const {
        IVec r(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += cartan[i][j] * beta[j];
        return r;
    }
    static int height(const IVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

    std::map<IVec, int> root_index_;
};

namespace detail {

inline void bond(IMat& a, int lng, int shrt, int mult) {
    a[shrt][lng] = -mult;
    a[lng][shrt] = -1;
}

inline IMat cartan_matrix(LieType t, int n) {
    auto bad = [&] {
        throw std::invalid_argument(std::string("unsupported Lie type ") + type_letter(t) + std::to_string(n));
    };
    IMat a(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) bond(a, i, i + 1, 1);
    };
    switch (t) {
    case LieType::A:
        if (n < 1) bad();
        chain(n);
        break;
    case LieType::B:
        if (n < 2) bad();
        if (n == 2) {
            bond(a, 1, 0, 2);
        } else {
            chain(n - 1);
            bond(a, n - 2, n - 1, 2);
        }
        break;
    case LieType::C:
        if (n < 2) bad();
        chain(n - 1);
        bond(a, n - 1, n - 2, 2);
        break;
    case LieType::D:
        if (n < 4) bad();
        chain(n - 1);
        bond(a, n - 3, n - 1, 1);
        break;
    case LieType::E:
        if (n < 6 || n > 8) bad();
        bond(a, 0, 2, 1);
        bond(a, 1, 3, 1);
        for (int i = 2; i + 1 < n; ++i) bond(a, i, i + 1, 1);
        break;
    case LieType::F:
        if (n != 4) bad();
        bond(a, 0, 1, 1);
        bond(a, 1, 2, 2);
        bond(a, 2, 3, 1);
        break;
    case LieType::G:
        if (n != 2) bad();
        bond(a, 1, 0, 3);
        break;
    }
    return a;
}

}  // namespace detail

inline RootSystem build_root_system(LieType t, int n) {
    if (n > 8) throw std::invalid_argument("rank above 8 is not supported");
    RootSystem rs;
    rs.type = t;
    rs.n = n;
    rs.cartan = detail::cartan_matrix(t, n);
    const IMat& a = rs.cartan;

    // Relative squared lengths from the symmetrizability of the Cartan matrix:
    // a[i][j] |alpha_i|^2 = a[j][i] |alpha_j|^2.
    rs.len2.assign(n, 0);
    rs.len2[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (j == i || a[i][j] == 0 || rs.len2[j] != 0) continue;
            rs.len2[j] = rs.len2[i] * a[i][j] / a[j][i];
            stack.push_back(j);
        }
    }
    Rational mx = *std::max_element(rs.len2.begin(), rs.len2.end());
    for (auto& x : rs.len2) x = 2 * x / mx;

    rs.killing_roots.assign(n, std::vector<Rational>(n));
    rs.killing_coroots.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rs.killing_roots[i][j] = a[i][j] * rs.len2[i] / 2;
            rs.killing_coroots[i][j] = 4 * rs.killing_roots[i][j] / (rs.len2[i] * rs.len2[j]);
        }

    // Positive roots by height, closing under root strings through simple roots.
    std::set<IVec> seen;
    std::vector<IVec> layer;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        seen.insert(e);
    }
    while (!layer.empty()) {
        for (auto& r : layer) rs.positive_roots.push_back(r);
        std::vector<IVec> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                IVec down = beta;
                int p = 0;
                while (true) {
                    down[i] -= 1;
                    if (!seen.count(down)) break;
                    ++p;
                }
                int q = p - rs.pair(beta, [&] {
                            IVec e(n, 0);
                            e[i] = 1;
                            return e;
                        }());
                if (q > 0) {
                    IVec up = beta;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) rs.root_index_[rs.positive_roots[k]] = static_cast<int>(k);
    for (const auto& r : rs.positive_roots) rs.positive_coroots.push_back(rs.coroot(r));

    rs.theta = rs.positive_roots.back();
    for (const auto& r : rs.positive_roots)
        if (RootSystem::height(r) > RootSystem::height(rs.theta)) rs.theta = r;
    rs.theta_dual = rs.coroot(rs.theta);
    rs.marks = rs.theta_dual;
    return rs;
}

/// Parses strings such as "A2", "b2", "G2".
inline RootSystem parse_root_system(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Lie type string: '" + s + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c < 'A' || c > 'G') throw std::invalid_argument("bad Lie type string: '" + s + "'");
    int n = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad Lie type string: '" + s + "'");
        n = n * 10 + (s[i] - '0');
        if (n > 99) throw std::invalid_argument("bad Lie type string: '" + s + "'");
    }
    return build_root_system(static_cast<LieType>(c - 'A'), n);
}

/// The untwisted affinization of a finite root system.
struct AffineRootData {
    RootSystem base;
    int n = 0;
    /// c = alpha_0^v + theta^v = (1, m_1, ..., m_n).
    CorootVec c;
    /// acartan[i][j] = <alpha_j, alpha_i^v>, i, j in 0..n.
    IMat acartan;

    std::string name() const { return base.name(); }
    int rank() const { return n; }

    /// Simple coroot alpha_i^v as a CorootVec.
    CorootVec simple_coroot(int i) const {
        CorootVec d(n + 1, 0);
        d[i] = 1;
        return d;
    }
    /// A finite coroot (coroot basis alpha_1^v..alpha_n^v) lifted to a CorootVec.
    CorootVec lift(const IVec& fin) const {
        CorootVec d(n + 1, 0);
        for (int i = 0; i < n; ++i) d[i + 1] = fin[i];
        return d;
    }
    Monomial q_monomial(const CorootVec& d) const {
        Monomial m;
        for (int i = 0; i <= n; ++i) {
            if (d[i] < 0) throw std::domain_error("q-monomial with negative exponent");
            m.e[i] = static_cast<std::uint8_t>(d[i]);
        }
        return m;
    }
    Monomial qc() const { return q_monomial(c); }
};

/// <lambda, d> for lambda = sum_i coeffs[i] lambda_i (+ any multiple of delta, which pairs to 0).
inline Rational pairing(const std::vector<Rational>& lambda, const CorootVec& d) {
    Rational s = 0;
    for (std::size_t i = 0; i < d.size() && i < lambda.size(); ++i) s += lambda[i] * d[i];
    return s;
}
/// <lambda_i, d> = d_i.
inline int pairing(int i, const CorootVec& d) { return d.at(i); }

inline AffineRootData affinize(const RootSystem& rs) {
    AffineRootData ad;
    ad.base = rs;
    ad.n = rs.n;
    int n = rs.n;
    ad.c.assign(n + 1, 0);
    ad.c[0] = 1;
    for (int i = 0; i < n; ++i) ad.c[i + 1] = rs.marks[i];
    ad.acartan.assign(n + 1, IVec(n + 1, 0));
    ad.acartan[0][0] = 2;
    for (int i = 0; i < n; ++i) {
        IVec ei(n, 0);
        ei[i] = 1;
        // <alpha_0, alpha_i^v> = -<theta, alpha_i^v>, <alpha_i, alpha_0^v> = -<alpha_i, theta^v>.
        ad.acartan[i + 1][0] = -rs.pair(rs.theta, ei);
        ad.acartan[0][i + 1] = -rs.pair(ei, rs.theta_dual);
        for (int j = 0; j < n; ++j) ad.acartan[i + 1][j + 1] = rs.cartan[i][j];
    }
    return ad;
}

inline AffineRootData parse_affine(const std::string& s) { return affinize(parse_root_system(s)); }

/// Real or imaginary affine root k*delta + beta with beta a finite root (or zero).
struct AffineRoot {
    int k = 0;
    IVec beta;

    bool real() const {
        return std::any_of(beta.begin(), beta.end(), [](int x) { return x != 0; });
    }
    bool positive() const {
        if (k > 0) return true;
        if (k < 0) return false;
        return RootSystem::is_positive(beta);
    }
    AffineRoot operator-() const {
        AffineRoot r{-k, beta};
        for (auto& x : r.beta) x = -x;
        return r;
    }
    bool operator==(const AffineRoot& o) const { return k == o.k && beta == o.beta; }
    bool operator<(const AffineRoot& o) const { return std::tie(k, beta) < std::tie(o.k, o.beta); }

    /// Coordinates in the affine simple roots alpha_0..alpha_n (delta = alpha_0 + theta).
    IVec simple_coords(const AffineRootData& ad) const {
        IVec r(ad.n + 1);
        r[0] = k;
        for (int i = 0; i < ad.n; ++i) r[i + 1] = k * ad.base.theta[i] + beta[i];
        return r;
    }
    int height(const AffineRootData& ad) const {
        auto s = simple_coords(ad);
        return std::accumulate(s.begin(), s.end(), 0);
    }
    /// (k delta + beta)^v = k (2/(beta|beta)) c + beta^v.
    CorootVec coroot(const AffineRootData& ad) const {
        if (!real()) throw std::invalid_argument("coroot of an imaginary root");
        int r = ad.base.coroot_scale(beta);
        CorootVec d = ad.lift(ad.base.coroot(beta));
        for (int i = 0; i <= ad.n; ++i) d[i] += k * r * ad.c[i];
        return d;
    }
    int coroot_height(const AffineRootData& ad) const { return ht(coroot(ad)); }

    std::string str(const AffineRootData& ad) const {
        auto s = simple_coords(ad);
        std::string out;
        for (int i = 0; i <= ad.n; ++i) {
            if (!s[i]) continue;
            if (!out.empty()) out += s[i] > 0 ? "+" : "-";
            else if (s[i] < 0) out += "-";
            int a = std::abs(s[i]);
            if (a != 1) out += std::to_string(a);
            out += "a" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
};

/// The affine simple root alpha_i as (level, finite part).
inline AffineRoot simple_affine_root(const AffineRootData& ad, int i) {
    AffineRoot r;
    r.beta.assign(ad.n, 0);
    if (i == 0) {
        r.k = 1;
        for (int j = 0; j < ad.n; ++j) r.beta[j] = -ad.base.theta[j];
    } else {
        r.beta[i - 1] = 1;
    }
    return r;
}

/// Builds the affine root with the given simple-root coordinates, if it is real.
inline AffineRoot affine_root_from_simple(const AffineRootData& ad, const IVec& coords) {
    AffineRoot r;
    r.k = coords.at(0);
    r.beta.assign(ad.n, 0);
    for (int i = 0; i < ad.n; ++i) r.beta[i] = coords[i + 1] - r.k * ad.base.theta[i];
    return r;
}

}  // namespace affqh
