#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace affqh {

using Rational = mpq_class;

inline constexpr int kMaxVars = 16;

/// Exponent vector of a monomial. Unused trailing slots stay zero.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    static Monomial var(int i, int pow = 1) {
        if (i < 0 || i >= kMaxVars) throw std::out_of_range("Monomial: variable index out of range");
        Monomial m;
        m.e[i] = static_cast<std::uint8_t>(pow);
        return m;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[i] + o.e[i];
            if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            if (o.e[i] > e[i]) throw std::domain_error("Monomial: not divisible");
            r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
        }
        return r;
    }
    auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in a std::map so iteration order is deterministic; zero
/// coefficients are never stored.
class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(long c) {
        if (c != 0) t_[Monomial{}] = c;
    }
    Poly(const Rational& c) {
        if (c != 0) t_[Monomial{}] = c;
    }
    static Poly var(int i, int pow = 1) {
        Poly p;
        p.t_[Monomial::var(i, pow)] = 1;
        return p;
    }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0) p.t_[m] = c;
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    Rational coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(Monomial{}); }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& c) {
        if (c == 0) {
            t_.clear();
            return *this;
        }
        for (auto& kv : t_) kv.second *= c;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& kv : r.t_) kv.second = -kv.second;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly mul_monomial(const Monomial& m, const Rational& c = 1) const {
        Poly r;
        if (c == 0) return r;
        for (const auto& [mm, cc] : t_) r.t_.emplace_hint(r.t_.end(), mm * m, cc * c);
        return r;
    }

    Poly pow(int k) const {
        Poly r(1), b = *this;
        while (k > 0) {
            if (k & 1) r *= b;
            k >>= 1;
            if (k) b *= b;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Highest total degree of a term, or -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& kv : t_) d = std::max(d, kv.first.degree());
        return d;
    }

    /// Weighted degree with per-variable weights; checks homogeneity when asked.
    int weighted_degree(const std::vector<int>& w) const {
        int d = -1;
        for (const auto& kv : t_) {
            int s = 0;
            for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * kv.first.e[i];
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous(const std::vector<int>& w) const {
        int d = -2;
        for (const auto& kv : t_) {
            int s = 0;
            for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * kv.first.e[i];
            if (d == -2) d = s;
            else if (d != s) return false;
        }
        return true;
    }

    /// Substitute variable i by the polynomial p in every term.
    Poly substitute(int i, const Poly& p) const {
        Poly r;
        std::vector<Poly> powers{Poly(1)};
        for (const auto& [m, c] : t_) {
            int k = m.e[i];
            while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * p);
            Monomial rest = m;
            rest.e[i] = 0;
            r += powers[k].mul_monomial(rest, c);
        }
        return r;
    }

    /// Simultaneous substitution x_i -> images[i] for i < images.size().
    Poly substitute_all(const std::vector<Poly>& images) const {
        std::vector<std::vector<Poly>> powers(images.size(), std::vector<Poly>{Poly(1)});
        Poly r;
        for (const auto& [m, c] : t_) {
            Poly acc(c);
            Monomial rest = m;
            for (std::size_t i = 0; i < images.size(); ++i) {
                int k = m.e[i];
                if (!k) continue;
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * images[i]);
                acc *= pw[k];
                rest.e[i] = 0;
            }
            r += acc.mul_monomial(rest);
        }
        return r;
    }

    /// Drop every term whose monomial is divisible by m.
    Poly reduce_mod_monomial(const Monomial& m) const {
        Poly r;
        for (const auto& [mm, c] : t_)
            if (!m.divides(mm)) r.t_.emplace_hint(r.t_.end(), mm, c);
        return r;
    }

    /// Keep only terms with exponent 0 in variable i (the specialization x_i = 0).
    Poly set_zero(int i) const {
        Poly r;
        for (const auto& [mm, c] : t_)
            if (mm.e[i] == 0) r.t_.emplace_hint(r.t_.end(), mm, c);
        return r;
    }

    /// Exact division by a nonzero polynomial; throws if a remainder is left.
    Poly exact_div(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("Poly::exact_div: division by zero");
        // Leading term with respect to the map order (lexicographic on exponents).
        const auto& [dm, dc] = *d.t_.rbegin();
        Poly rem = *this, q;
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *rem.t_.rbegin();
            if (!dm.divides(rm)) throw std::domain_error("Poly::exact_div: nonzero remainder");
            Monomial qm = rm / dm;
            Rational qc = rc / dc;
            q.add_term(qm, qc);
            rem -= d.mul_monomial(qm, qc);
        }
        return q;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Print higher-degree terms first for readability.
        std::vector<std::pair<Monomial, Rational>> v(t_.rbegin(), t_.rend());
        std::stable_sort(v.begin(), v.end(),
                         [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
        for (const auto& [m, c] : v) {
            Rational a = abs(c);
            bool neg = c < 0;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            bool unit = (a == 1);
            if (!unit || m.is_one()) os << a.get_str();
            bool need_mul = !unit;
            for (int i = 0; i < kMaxVars; ++i) {
                if (!m.e[i]) continue;
                if (need_mul) os << "*";
                need_mul = true;
                os << (i < static_cast<int>(names.size()) ? names[i] : "v" + std::to_string(i));
                if (m.e[i] > 1) os << "^" << int(m.e[i]);
            }
        }
        return os.str();
    }

private:
    Terms t_;
};

}  // namespace affqh
