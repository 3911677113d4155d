#pragma once

#include "affqh/chevalley_roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace affqh {

/// Positive real roots alpha with alpha^v <= d. The alpha_0^v coordinate of the
/// coroot of k delta + beta is at least k, so levels above d_0 never qualify.
inline std::vector<AffineRoot> roots_with_coroot_below(const AffineWeyl& W, const CorootVec& d) {
    std::vector<AffineRoot> out;
    for (int k = 0; k <= d.at(0); ++k)
        for (const auto& a : W.shell(k))
            if (leq(a.coroot(W.data()), d)) out.push_back(a);
    return out;
}

/// Bruhat-maximal elements of a set.
inline std::vector<int> bruhat_maximal(AffineWeyl& W, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::sort(s.begin(), s.end(), [&](int a, int b) { return W.length(a) > W.length(b); });
    std::vector<int> out;
    for (int x : s) {
        bool dominated = false;
        for (int y : out)
            if (W.bruhat_leq(x, y)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        if (W.length(a) != W.length(b)) return W.length(a) < W.length(b);
        return W.str(a) < W.str(b);
    });
    return out;
}

/// Elements reachable from the starting set by moment-graph walks w -> w s_alpha
/// whose edge degrees alpha^v sum to at most d componentwise.
inline std::vector<int> reachable(AffineWeyl& W, const std::vector<int>& start, const CorootVec& d) {
    if (!effective(d)) throw std::invalid_argument("curve degree must be effective");
    auto roots = roots_with_coroot_below(W, d);
    std::vector<std::pair<int, CorootVec>> refl;
    for (const auto& a : roots) refl.emplace_back(W.reflection(a), a.coroot(W.data()));
    std::set<std::pair<int, CorootVec>> seen;
    std::vector<std::pair<int, CorootVec>> stack;
    CorootVec zero(d.size(), 0);
    for (int s : start)
        if (seen.insert({s, zero}).second) stack.push_back({s, zero});
    while (!stack.empty()) {
        auto [w, spent] = stack.back();
        stack.pop_back();
        for (const auto& [r, cv] : refl) {
            CorootVec next = spent + cv;
            if (!leq(next, d)) continue;
            std::pair<int, CorootVec> st{W.mul(w, r), next};
            if (seen.insert(st).second) stack.push_back(st);
        }
    }
    std::vector<int> out;
    for (const auto& st : seen) out.push_back(st.first);
    return out;
}

/// The Bruhat-maximal elements z_d^1, ..., z_d^k reachable from the identity.
inline std::vector<int> z_components(AffineWeyl& W, const CorootVec& d) {
    return bruhat_maximal(W, reachable(W, {W.identity()}, d));
}

/// All v <= u in the Bruhat order.
inline std::vector<int> bruhat_lower_ideal(AffineWeyl& W, int u) {
    std::set<int> seen{u};
    std::vector<int> stack{u};
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (const auto& c : W.covers_down(w))
            if (seen.insert(c.target).second) stack.push_back(c.target);
    }
    return {seen.begin(), seen.end()};
}

/// Theta_d(u) through the Hecke product: maximal elements of {u . z : z in z_d}.
/// With max_length >= 0, results longer than that raise TruncationError.
inline std::vector<int> curve_neighborhood(AffineWeyl& W, int u, const CorootVec& d, int max_length = -1) {
    std::vector<int> prods;
    for (int z : z_components(W, d)) prods.push_back(W.hecke(u, z));
    auto out = bruhat_maximal(W, prods);
    if (max_length >= 0)
        for (int x : out)
            if (W.length(x) > max_length) throw TruncationError(W.length(x), "curve neighborhood exceeds truncation");
    return out;
}

/// Theta_d(u) directly from the moment graph: maximal elements reachable from X(u).
inline std::vector<int> curve_neighborhood_moment(AffineWeyl& W, int u, const CorootVec& d) {
    return bruhat_maximal(W, reachable(W, bruhat_lower_ideal(W, u), d));
}

/// <eps_i, eps_u, [X(w)]>_d: nonzero only when 1 + l(u) = l(w) + 2 ht(d) and X(u)
/// is a component of Theta_d(X(w)); then it equals <lambda_i, d>.
inline int gw_invariant(AffineWeyl& W, int i, int u, int w, const CorootVec& d) {
    if (i < 0 || i > W.rank()) throw std::invalid_argument("gw_invariant: index out of range");
    if (1 + W.length(u) != W.length(w) + 2 * ht(d)) return 0;
    if (d.at(i) == 0) return 0;
    auto theta = curve_neighborhood(W, w, d);
    return std::find(theta.begin(), theta.end(), u) != theta.end() ? d[i] : 0;
}

struct MomentEdge {
    int source, target;
    AffineRoot root;
    CorootVec degree;
};

struct MomentGraphSlice {
    int L = 0;
    std::vector<int> vertices;
    std::vector<MomentEdge> edges;
};

/// Vertices of length <= L and the edges w -> w s_alpha between them, oriented
/// upward in length.
inline MomentGraphSlice moment_graph(AffineWeyl& W, int L) {
    MomentGraphSlice g;
    g.L = L;
    for (const auto& layer : W.enumerate_up_to(L))
        g.vertices.insert(g.vertices.end(), layer.begin(), layer.end());
    for (int w : g.vertices)
        for (int k = 0;; ++k) {
            if (k >= 1 && W.shell_length_bound(k) > 2 * L) break;
            for (const auto& a : W.shell(k)) {
                int t = W.mul(w, W.reflection(a));
                if (W.length(t) <= W.length(w) || W.length(t) > L) continue;
                g.edges.push_back(MomentEdge{w, t, a, a.coroot(W.data())});
            }
        }
    return g;
}

inline std::string to_dot(AffineWeyl& W, const MomentGraphSlice& g) {
    std::ostringstream os;
    os << "digraph moment_graph {\n";
    for (int v : g.vertices) os << "  \"" << W.str(v) << "\";\n";
    for (const auto& e : g.edges)
        os << "  \"" << W.str(e.source) << "\" -> \"" << W.str(e.target) << "\" [label=\"" << vec_str(e.degree) << "\"];\n";
    os << "}\n";
    return os.str();
}

/// A weighted quantum Bruhat cover u -> u s_alpha with weight 1 or q^{alpha^v}.
struct QBruhatCover {
    int source, target;
    AffineRoot root;
    CorootVec coroot;
    bool quantum = false;

    CorootVec weight(int n) const { return quantum ? coroot : CorootVec(n + 1, 0); }
};

inline std::vector<QBruhatCover> qbruhat_covers(AffineWeyl& W, const ChevalleyRootSet& pi, int u) {
    std::vector<QBruhatCover> out;
    for (const auto& c : W.covers_up(u)) out.push_back(QBruhatCover{u, c.target, c.root, c.root.coroot(W.data()), false});
    for (const auto& a : pi) {
        int t = W.mul(u, a.reflection);
        if (W.length(t) == W.length(u) + 1 - 2 * a.coroot_height)
            out.push_back(QBruhatCover{u, t, a.root, a.coroot, true});
    }
    return out;
}

enum class ChainType { Classical, OneQ, QOne, QQPrime, QQDoublePrime };

inline const char* chain_type_name(ChainType t) {
    switch (t) {
    case ChainType::Classical: return "(11)";
    case ChainType::OneQ: return "(1q)";
    case ChainType::QOne: return "(q1)";
    case ChainType::QQPrime: return "(qq)'";
    case ChainType::QQDoublePrime: return "(qq)''";
    }
    return "?";
}

struct QBruhatChain {
    QBruhatCover first, second;
    ChainType type;
};

/// <alpha, beta^v> for positive real affine roots.
inline int root_pairing(const AffineRootData& ad, const AffineRoot& a, const AffineRoot& b) {
    IVec ac = a.simple_coords(ad);
    CorootVec bv = b.coroot(ad);
    int s = 0;
    for (int i = 0; i <= ad.n; ++i)
        for (int j = 0; j <= ad.n; ++j) s += ac[i] * bv[j] * ad.acartan[j][i];
    return s;
}

/// Length-two chains u -> u' -> v of total weight q^kappa.
inline std::vector<QBruhatChain> qbruhat_chains(AffineWeyl& W, const ChevalleyRootSet& pi, int u, int v,
                                                const CorootVec& kappa) {
    std::vector<QBruhatChain> out;
    int n = W.rank();
    for (const auto& c1 : qbruhat_covers(W, pi, u)) {
        CorootVec rest = kappa - c1.weight(n);
        if (!effective(rest)) continue;
        for (const auto& c2 : qbruhat_covers(W, pi, c1.target)) {
            if (c2.target != v || c2.weight(n) != rest) continue;
            ChainType t;
            if (!c1.quantum && !c2.quantum) t = ChainType::Classical;
            else if (!c1.quantum) t = ChainType::OneQ;
            else if (!c2.quantum) t = ChainType::QOne;
            else t = root_pairing(W.data(), c1.root, c2.root) == 0 ? ChainType::QQPrime : ChainType::QQDoublePrime;
            out.push_back(QBruhatChain{c1, c2, t});
        }
    }
    return out;
}

}  // namespace affqh
