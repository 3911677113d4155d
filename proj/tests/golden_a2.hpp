#pragma once

// Products sigma_u * sigma_v in the affine quantum ring of Fl(3), as printed in the reference table,
// for every unordered pair {u, v}. Two entries are not printed there
// and are obtained from the printed ones by the diagram symmetry 1 <-> 2 fixing 0.

#include "affqh/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace golden {

struct Entry {
    std::string u, v;
    std::vector<std::pair<std::string, affqh::Poly>> terms;
};

inline std::vector<Entry> a2_table() {
    using affqh::Poly;
    Poly q0 = Poly::var(0), q1 = Poly::var(1), q2 = Poly::var(2), one(1);
    std::vector<Entry> t{
        {"s1", "s1", {{"s2s1", one}, {"id", q0 + q1}}},
        {"s1", "s2", {{"s1s2", one}, {"s2s1", one}, {"id", q0}}},
        {"s1", "s1s2", {{"s1s2s1", one}, {"s2", q0}, {"s1", -q0}}},
        {"s1", "s2s1", {{"s1", q0}, {"s2", q1 - q0}}},
        {"s1", "s1s2s1", {{"s2s1", q0}, {"s1s2", q0 + q1}, {"id", q2 * (q1 - q0)}}},
        {"s2", "s2", {{"s1s2", one}, {"id", q0 + q2}}},
        {"s2", "s1s2", {{"s1", q2 - q0}, {"s2", q0}}},
        {"s2", "s2s1", {{"s1s2s1", one}, {"s1", q0}, {"s2", -q0}}},
        {"s2", "s1s2s1", {{"s1s2", q0}, {"s2s1", q0 + q2}, {"id", q1 * (q2 - q0)}}},
        {"s1s2", "s1s2", {{"s2s1", q2 - q0}, {"s1s2", -q0}, {"id", Poly(2) * q0 * q2}}},
        {"s1s2", "s2s1", {{"s1s2", q0}, {"s2s1", q0}, {"id", q1 * q2 + q0 * (q1 + q2)}}},
        {"s1s2", "s1s2s1", {{"s1", Poly(2) * q0 * q2}, {"s2", q1 * q2 - q0 * q1 - q0 * q2}}},
        {"s1s2s1", "s1s2s1", {{"s2s1", q1 * (q2 - q0)}, {"s1s2", q2 * (q1 - q0)}, {"id", Poly(3) * q0 * q1 * q2}}},
        // Images of the (s1s2, s1s2) and (s1s2, w0) entries under the symmetry.
        {"s2s1", "s2s1", {{"s1s2", q1 - q0}, {"s2s1", -q0}, {"id", Poly(2) * q0 * q1}}},
        {"s2s1", "s1s2s1", {{"s2", Poly(2) * q0 * q1}, {"s1", q1 * q2 - q0 * q2 - q0 * q1}}},
    };
    for (std::string w : {"id", "s1", "s2", "s1s2", "s2s1", "s1s2s1"}) t.push_back({"id", w, {{w, one}}});
    return t;
}

}  // namespace golden
