#pragma once

#include "affqh/affine_weyl.hpp"

#include <stdexcept>
#include <vector>

namespace affqh {

struct ChevalleyRoot {
    AffineRoot root;
    CorootVec coroot;
    int coroot_height = 0;
    int root_height = 0;
    /// l(s_alpha) = 2 ht(alpha^v) - 1.
    int length = 0;
    /// A palindromic reduced word of s_alpha.
    IVec word;
    int reflection = -1;
};

using ChevalleyRootSet = std::vector<ChevalleyRoot>;

/// A palindromic reduced word for the reflection s_alpha (alpha positive real):
/// strip a left descent s_i with l(s_i s_alpha s_i) = l(s_alpha) - 2 and recurse.
inline IVec palindromic_word(AffineWeyl& W, const AffineRoot& alpha) {
    int r = W.reflection(alpha);
    int l = W.length(r);
    if (l == 1) {
        for (int i = 0; i <= W.rank(); ++i)
            if (W.s(i) == r) return {i};
    }
    for (int i = 0; i <= W.rank(); ++i) {
        if (!W.left_descent(r, i)) continue;
        int conj = W.mul(W.lmul_s(i, r), W.s(i));
        if (W.length(conj) != l - 2) continue;
        IVec inner = palindromic_word(W, W.reflection_root(conj));
        IVec out{i};
        out.insert(out.end(), inner.begin(), inner.end());
        out.push_back(i);
        return out;
    }
    throw std::logic_error("palindromic_word: no conjugating descent found");
}

/// Whether the real positive root alpha satisfies l(s_alpha) = 2 ht(alpha^v) - 1.
inline bool is_chevalley(AffineWeyl& W, const AffineRoot& alpha) {
    if (!alpha.real()) throw std::invalid_argument("is_chevalley: imaginary root");
    if (!alpha.positive()) throw std::invalid_argument("is_chevalley: negative root");
    return W.length(W.reflection(alpha)) == 2 * alpha.coroot_height(W.data()) - 1;
}

/// All positive real roots with l(s_alpha) = 2 ht(alpha^v) - 1. Candidates are the
/// positive real roots with alpha^v <= c; these only occur at levels 0 and 1.
inline ChevalleyRootSet enumerate_chevalley_roots(AffineWeyl& W) {
    const auto& ad = W.data();
    ChevalleyRootSet out;
    for (int k = 0; k <= 1; ++k)
        for (const auto& alpha : W.shell(k)) {
            CorootVec cv = alpha.coroot(ad);
            if (!leq(cv, ad.c)) continue;
            if (!is_chevalley(W, alpha)) continue;
            ChevalleyRoot cr;
            cr.root = alpha;
            cr.coroot = cv;
            cr.coroot_height = ht(cv);
            cr.root_height = alpha.height(ad);
            cr.reflection = W.reflection(alpha);
            cr.length = W.length(cr.reflection);
            cr.word = palindromic_word(W, alpha);
            out.push_back(std::move(cr));
        }
    std::stable_sort(out.begin(), out.end(), [](const ChevalleyRoot& a, const ChevalleyRoot& b) {
        if (a.coroot_height != b.coroot_height) return a.coroot_height < b.coroot_height;
        return a.coroot < b.coroot;
    });
    return out;
}

}  // namespace affqh
