#pragma once

#include "affqh/poly.hpp"

#include <map>

namespace affqh {

namespace detail {
inline bool is_zero_coeff(const Rational& r) { return r == 0; }
inline bool is_zero_coeff(const Poly& p) { return p.is_zero(); }
}  // namespace detail

/// Finite linear combination of basis elements (integer ids) with coefficients
/// in C (Rational or Poly). Zero coefficients are never stored.
template <class C>
struct LinComb {
    std::map<int, C> t;

    static LinComb basis(int k) {
        LinComb r;
        r.t[k] = C(1);
        return r;
    }

    bool is_zero() const { return t.empty(); }
    C coeff(int k) const {
        auto it = t.find(k);
        return it == t.end() ? C(0) : it->second;
    }

    void add(int k, const C& c) {
        if (detail::is_zero_coeff(c)) return;
        auto [it, inserted] = t.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (detail::is_zero_coeff(it->second)) t.erase(it);
        }
    }
    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.t) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.t) add(k, -c);
        return *this;
    }
    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

    template <class S>
    LinComb scaled(const S& s) const {
        LinComb r;
        for (const auto& [k, c] : t) r.add(k, c * s);
        return r;
    }
    /// this += s * o
    template <class S>
    void axpy(const S& s, const LinComb& o) {
        for (const auto& [k, c] : o.t) add(k, c * s);
    }

    bool operator==(const LinComb& o) const { return t == o.t; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }
};

using FinCohClass = LinComb<Rational>;
/// Class with coefficients in Q[q_0..q_n]; used for QH_aff(G/B) and H(Fl_G) tensor Q[q].
using QClass = LinComb<Poly>;

inline QClass to_qclass(const FinCohClass& a) {
    QClass r;
    for (const auto& [k, c] : a.t) r.add(k, Poly(c));
    return r;
}

/// Keeps the q-free part of a class (all q variables set to zero).
inline FinCohClass q_free_part(const QClass& a) {
    FinCohClass r;
    for (const auto& [k, c] : a.t) r.add(k, c.constant_term());
    return r;
}

}  // namespace affqh
