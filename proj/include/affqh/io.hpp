#pragma once

#include "affqh/lincomb.hpp"
#include "affqh/poly.hpp"
#include "affqh/toda.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affqh {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline void rational_json(const Rational& c, json& out) {
    if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
        throw std::overflow_error("coefficient does not fit the JSON integer range");
    out["num"] = c.get_num().get_si();
    out["den"] = c.get_den().get_si();
}

inline Rational rational_from_json(const json& j) {
    long num = j.at("num").get<long>(), den = j.at("den").get<long>();
    if (den == 0) throw std::invalid_argument("JSON coefficient with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// A class sum_w c_w(q) [w] as a list of {"w": word, "coeff": {"q": [e_0..e_n], "num", "den"}},
/// one entry per Schubert class and q-monomial.
inline json class_to_json(const QClass& a, int n, const std::function<IVec(int)>& word) {
    json terms = json::array();
    for (const auto& [w, c] : a.t)
        for (const auto& [m, r] : c.terms()) {
            json coeff;
            std::vector<int> q(m.e.begin(), m.e.begin() + n + 1);
            coeff["q"] = q;
            rational_json(r, coeff);
            terms.push_back({{"w", word(w)}, {"coeff", coeff}});
        }
    return terms;
}

/// Inverse of class_to_json; words go through from_word, so non-reduced words are accepted.
inline QClass class_from_json(const json& terms, int n, const std::function<int(const IVec&)>& from_word) {
    if (!terms.is_array()) throw std::invalid_argument("class JSON must be an array of terms");
    QClass a;
    for (const auto& t : terms) {
        IVec w = t.at("w").get<IVec>();
        const json& c = t.at("coeff");
        auto q = c.at("q").get<std::vector<int>>();
        if (static_cast<int>(q.size()) != n + 1) throw std::invalid_argument("q exponent vector has the wrong length");
        Monomial m;
        for (int i = 0; i <= n; ++i) {
            if (q[i] < 0 || q[i] > 255) throw std::invalid_argument("q exponent out of range");
            m.e[i] = static_cast<std::uint8_t>(q[i]);
        }
        a.add(from_word(w), Poly::term(m, rational_from_json(c)));
    }
    return a;
}

inline json class_document(const std::string& type, const QClass& a, int n, const std::function<IVec(int)>& word) {
    return {{"schema_version", kSchemaVersion}, {"type", type}, {"terms", class_to_json(a, n, word)}};
}

/// A relation polynomial as terms {"q": [e_0..e_n], "x": [e_1..e_n], "num", "den"}.
inline json relation_to_json(const Relation& r, int n) {
    json terms = json::array();
    for (const auto& [m, c] : r.poly.terms()) {
        json t;
        t["q"] = std::vector<int>(m.e.begin(), m.e.begin() + n + 1);
        t["x"] = std::vector<int>(m.e.begin() + n + 1, m.e.begin() + 2 * n + 1);
        rational_json(c, t);
        terms.push_back(t);
    }
    return {{"name", r.name}, {"degree", r.degree}, {"text", r.poly.to_string(relation_names(n))}, {"terms", terms}};
}

inline Relation relation_from_json(const json& j, int n) {
    Poly p;
    for (const auto& t : j.at("terms")) {
        auto q = t.at("q").get<std::vector<int>>();
        auto x = t.at("x").get<std::vector<int>>();
        if (static_cast<int>(q.size()) != n + 1 || static_cast<int>(x.size()) != n)
            throw std::invalid_argument("relation term has the wrong number of exponents");
        Monomial m;
        for (int i = 0; i <= n; ++i) m.e[i] = static_cast<std::uint8_t>(q[i]);
        for (int i = 0; i < n; ++i) m.e[n + 1 + i] = static_cast<std::uint8_t>(x[i]);
        p.add_term(m, rational_from_json(t));
    }
    return make_relation(n, j.at("name").get<std::string>(), p);
}

inline json presentation_to_json(const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relations) rels.push_back(relation_to_json(r, p.rank));
    json j{{"schema_version", kSchemaVersion},
           {"type", p.type},
           {"generators", p.generators},
           {"relations", rels},
           {"complete", p.complete}};
    if (!p.gap.empty()) j["gap"] = p.gap;
    return j;
}

}  // namespace affqh
