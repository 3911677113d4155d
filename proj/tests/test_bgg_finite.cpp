#include "affqh/bgg_finite.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace affqh;

namespace {

Poly random_poly(std::mt19937& rng, int nvars, int degree, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), var(0, nvars - 1);
    Poly p;
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int k = 0; k < degree; ++k) ++m.e[var(rng)];
        p.add_term(m, coef(rng));
    }
    return p;
}

// Classical Chevalley formula: sigma_i sigma_w = sum <omega_i, beta^v> sigma_{w s_beta}
// over positive roots beta with l(w s_beta) = l(w) + 1.
FinCohClass chevalley_oracle(const FiniteWeyl& W, int i, int w) {
    const auto& rs = W.roots();
    FinCohClass r;
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        int v = W.mul(w, W.reflection_of(static_cast<int>(k)));
        if (W.length(v) != W.length(w) + 1) continue;
        r.add(v, rs.positive_coroots[k][i - 1]);
    }
    return r;
}

// All reduced words of an affine Weyl group element.
void reduced_words(AffineWeyl& W, int w, IVec suffix, std::vector<IVec>& out) {
    if (W.length(w) == 0) {
        out.push_back(IVec(suffix.rbegin(), suffix.rend()));
        return;
    }
    for (int i = 0; i <= W.rank(); ++i) {
        if (!W.right_descent(w, i)) continue;
        IVec s = suffix;
        s.push_back(i);
        reduced_words(W, W.rmul_s(w, i), s, out);
    }
}

}  // namespace

TEST(FiniteWeyl, Orders) {
    std::vector<std::pair<std::string, int>> cases{{"A1", 2},  {"A2", 6},  {"A3", 24}, {"B2", 8},  {"G2", 12},
                                                   {"B3", 48}, {"C3", 48}, {"D4", 192}, {"F4", 1152}};
    for (auto& [t, order] : cases) {
        FiniteWeyl W(parse_root_system(t));
        EXPECT_EQ(W.size(), order) << t;
        EXPECT_EQ(W.length(W.w0()), static_cast<int>(W.roots().positive_roots.size())) << t;
        for (int v = 0; v < W.size(); ++v) {
            EXPECT_EQ(W.mul(v, W.inv(v)), 0);
            EXPECT_EQ(W.length(W.inv(v)), W.length(v));
        }
    }
    EXPECT_THROW(FiniteWeyl(parse_root_system("E8")), std::invalid_argument);
}

TEST(FiniteWeyl, ParseAndDescents) {
    FiniteWeyl W(parse_root_system("A2"));
    EXPECT_EQ(W.parse("s1s2s1"), W.w0());
    EXPECT_EQ(W.parse("s1s1"), 0);
    EXPECT_EQ(W.str(0), "id");
    EXPECT_THROW(W.parse("s3"), std::invalid_argument);
    EXPECT_THROW(W.parse("x1"), std::invalid_argument);
    int v = W.parse("s1s2");
    EXPECT_TRUE(W.right_descent(v, 2));
    EXPECT_FALSE(W.right_descent(v, 1));
    EXPECT_TRUE(W.left_descent(v, 1));
    EXPECT_EQ(W.lmul(1, v), W.parse("s2"));
    EXPECT_EQ(W.reflection(W.roots().theta), W.w0());
}

TEST(Bgg, DividedDifferenceExamples) {
    for (std::string t : {"A2", "B2", "G2", "A3", "C3"}) {
        Bgg B(parse_root_system(t));
        int n = B.rank();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                EXPECT_EQ(B.divided_difference(B.simple(i), B.omega(j)), Poly(i == j ? 1 : 0)) << t;
        for (int i = 1; i <= n; ++i)
            EXPECT_EQ(B.divided_difference(B.roots().theta, B.omega(i)), Poly(B.roots().marks[i - 1])) << t;
    }
}

TEST(Bgg, DividedDifferenceProperties) {
    std::mt19937 rng(7);
    for (std::string t : {"A2", "B2", "G2", "B3"}) {
        Bgg B(parse_root_system(t));
        for (const auto& beta : B.roots().positive_roots) {
            IVec nb = beta;
            for (auto& x : nb) x = -x;
            for (int trial = 0; trial < 3; ++trial) {
                Poly f = random_poly(rng, B.rank(), 3, 5), g = random_poly(rng, B.rank(), 2, 4);
                Poly df = B.divided_difference(beta, f);
                EXPECT_TRUE(B.divided_difference(beta, df).is_zero());
                EXPECT_EQ(B.divided_difference(nb, f), -df);
                Poly lhs = B.divided_difference(beta, f * g);
                Poly rhs = df * g + B.reflect(beta, f) * B.divided_difference(beta, g);
                EXPECT_EQ(lhs, rhs) << t;
            }
        }
    }
}

TEST(Bgg, TopClassAndRoundTrip) {
    Bgg A2(parse_root_system("A2"));
    Poly a1 = A2.root_poly({1, 0}), a2 = A2.root_poly({0, 1});
    EXPECT_EQ(A2.schubert_rep(A2.weyl().w0()), a1 * a2 * (a1 + a2) * Rational(1, 6));
    EXPECT_EQ(A2.schubert_rep(0), Poly(1));
    for (std::string t : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        Bgg B(parse_root_system(t));
        for (int i = 1; i <= B.rank(); ++i) EXPECT_EQ(B.schubert_rep(B.weyl().from_word({i})), B.omega(i));
        for (int w = 0; w < B.weyl().size(); ++w)
            EXPECT_EQ(B.expand(B.schubert_rep(w)), FinCohClass::basis(w)) << t << " " << B.weyl().str(w);
    }
}

TEST(Bgg, InvariantQuadricExpandsToZero) {
    for (std::string t : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        Bgg B(parse_root_system(t));
        Poly f1;
        for (int i = 0; i < B.rank(); ++i)
            for (int j = 0; j < B.rank(); ++j) f1 += Poly::var(i) * Poly::var(j) * B.roots().killing_coroots[i][j];
        for (const auto& beta : B.roots().positive_roots) EXPECT_EQ(B.reflect(beta, f1), f1);
        EXPECT_TRUE(B.expand(f1).is_zero()) << t;
    }
}

TEST(Bgg, ChevalleyFormulaAgainstOracle) {
    for (std::string t : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        Bgg B(parse_root_system(t));
        for (int w = 0; w < B.weyl().size(); ++w)
            for (int i = 1; i <= B.rank(); ++i)
                EXPECT_EQ(B.divisor_times(i, w), chevalley_oracle(B.weyl(), i, w)) << t << " i=" << i << " w=" << B.weyl().str(w);
    }
}

TEST(Bgg, CupProductAndPairing) {
    Bgg B(parse_root_system("A2"));
    const auto& W = B.weyl();
    auto s = [&](const char* x) { return FinCohClass::basis(W.parse(x)); };
    EXPECT_EQ(B.cup(s("s2"), s("s2")), s("s1s2"));
    EXPECT_EQ(B.cup(s("s1"), s("s1")), s("s2s1"));
    EXPECT_EQ(B.cup(s("id"), s("s1s2")), s("s1s2"));
    EXPECT_EQ(B.pairing(s("s1"), s("s1s2")), 1);
    for (std::string t : {"A2", "B2", "G2", "A3"}) {
        Bgg C(parse_root_system(t));
        const auto& V = C.weyl();
        for (int u = 0; u < V.size(); ++u)
            for (int v = 0; v < V.size(); ++v)
                EXPECT_EQ(C.pairing(FinCohClass::basis(u), FinCohClass::basis(v)), v == V.mul(V.w0(), u) ? 1 : 0) << t;
    }
}

TEST(Bgg, DegreeGuard) {
    Bgg B(parse_root_system("A2"));
    EXPECT_TRUE(B.expand(Poly::var(0).pow(4)).is_zero());
    auto top = FinCohClass::basis(B.weyl().w0());
    EXPECT_TRUE(B.cup(top, FinCohClass::basis(B.weyl().parse("s1"))).is_zero());
    EXPECT_TRUE(B.partial_simple(1, FinCohClass::basis(0)).is_zero());
}

TEST(Bgg, PiDExamples) {
    Bgg B(parse_root_system("A2"));
    const auto& W = B.weyl();
    auto s = [&](const char* x) { return FinCohClass::basis(W.parse(x)); };
    EXPECT_EQ(B.partial_neg_theta(s("s1s2")), s("s1") - s("s2"));
    EXPECT_EQ(B.pi_D({0}, s("s1s2")), s("s1") - s("s2"));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) EXPECT_EQ(B.pi_D({i}, FinCohClass::basis(W.from_word({j}))), i == j ? s("id") : FinCohClass());
    // d_{-theta} on classes agrees with the general root operator.
    IVec nt = B.neg_theta();
    for (int w = 0; w < W.size(); ++w)
        EXPECT_EQ(B.partial_neg_theta(FinCohClass::basis(w)), B.partial_root(nt, FinCohClass::basis(w)));
}

TEST(Bgg, M0iTable) {
    for (std::string t : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"}) {
        AffineRootData ad = parse_affine(t);
        AffineWeyl W(ad);
        for (int i = 1; i <= ad.n; ++i) {
            int p = ad.acartan[0][i] * ad.acartan[i][0];
            int expected = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
            int g = W.mul(W.s(0), W.s(i)), x = g, order = 1;
            while (x != W.identity()) {
                x = W.mul(x, g);
                ++order;
            }
            EXPECT_EQ(order, expected) << t << " i=" << i;
        }
    }
}

TEST(Bgg, BraidAndNilRelationsForPi) {
    for (std::string t : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
        AffineRootData ad = parse_affine(t);
        Bgg B(ad.base);
        for (int i = 0; i <= ad.n; ++i)
            for (int w = 0; w < B.weyl().size(); ++w) EXPECT_TRUE(B.pi_D({i, i}, FinCohClass::basis(w)).is_zero());
        for (int i = 0; i <= ad.n; ++i)
            for (int j = i + 1; j <= ad.n; ++j) {
                int p = ad.acartan[i][j] * ad.acartan[j][i];
                int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
                IVec a, b;
                for (int k = 0; k < m; ++k) {
                    a.push_back(k % 2 ? j : i);
                    b.push_back(k % 2 ? i : j);
                }
                for (int w = 0; w < B.weyl().size(); ++w)
                    EXPECT_EQ(B.pi_D(a, FinCohClass::basis(w)), B.pi_D(b, FinCohClass::basis(w))) << t;
            }
    }
}

TEST(Bgg, PiWordIndependence) {
    for (std::string t : {"A2", "B2", "G2"}) {
        AffineWeyl W(parse_affine(t));
        Bgg B(W.data().base);
        const auto& graded = W.enumerate_up_to(4);
        for (const auto& layer : graded)
            for (int w : layer) {
                std::vector<IVec> words;
                reduced_words(W, w, {}, words);
                for (int v = 0; v < B.weyl().size(); ++v) {
                    auto ref = B.pi_D(words[0], FinCohClass::basis(v));
                    for (const auto& word : words) EXPECT_EQ(B.pi_D(word, FinCohClass::basis(v)), ref) << t;
                }
            }
    }
}

TEST(Bgg, LeibnizOnClasses) {
    for (std::string t : {"A2", "B2", "G2"}) {
        Bgg B(parse_root_system(t));
        const auto& W = B.weyl();
        std::vector<IVec> roots = B.roots().positive_roots;
        for (auto r : B.roots().positive_roots) {
            for (auto& x : r) x = -x;
            roots.push_back(r);
        }
        for (const auto& beta : roots) {
            FinCohClass c1 = B.expand(B.root_poly(beta));
            for (int u = 0; u < W.size(); ++u)
                for (int v = 0; v < W.size(); ++v) {
                    auto x = FinCohClass::basis(u), y = FinCohClass::basis(v);
                    auto dx = B.partial_root(beta, x), dy = B.partial_root(beta, y);
                    auto lhs = B.partial_root(beta, B.cup(x, y));
                    auto rhs = B.cup(dx, y) + B.cup(x, dy) - B.cup(c1, B.cup(dx, dy));
                    EXPECT_EQ(lhs, rhs) << t;
                }
        }
    }
}

TEST(Bgg, PairingSymmetryOfRootOperators) {
    for (std::string t : {"A2", "B2", "G2", "A3"}) {
        Bgg B(parse_root_system(t));
        const auto& W = B.weyl();
        int top = B.top_degree();
        for (const auto& beta : B.roots().positive_roots)
            for (int u = 0; u < W.size(); ++u)
                for (int v = 0; v < W.size(); ++v) {
                    if (W.length(u) + W.length(v) != top + 1) continue;
                    auto a = FinCohClass::basis(u), b = FinCohClass::basis(v);
                    EXPECT_EQ(B.pairing(B.partial_root(beta, a), b), B.pairing(a, B.partial_root(beta, b))) << t;
                }
    }
}

TEST(Bgg, ClassicalExpression) {
    Bgg B(parse_root_system("A2"));
    const auto& W = B.weyl();
    auto expr = B.classical_expression(W.parse("s1s2"));
    ASSERT_EQ(expr.size(), 1u);
    EXPECT_EQ(expr[0].first, Monomial::var(1, 2));
    EXPECT_EQ(expr[0].second, 1);
    auto top = B.classical_expression(W.w0());
    ASSERT_EQ(top.size(), 1u);
    EXPECT_EQ(top[0].first, Monomial::var(0) * Monomial::var(1, 2));
    for (std::string t : {"A2", "B2", "G2", "A3", "B3"}) {
        Bgg C(parse_root_system(t));
        for (int w = 0; w < C.weyl().size(); ++w) {
            Poly p;
            for (const auto& [m, c] : C.classical_expression(w)) p.add_term(m, c);
            EXPECT_EQ(C.expand(p), FinCohClass::basis(w)) << t;
        }
    }
}
