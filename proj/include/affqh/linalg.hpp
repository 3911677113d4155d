#pragma once

#include "affqh/poly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace affqh {

using QVec = std::vector<Rational>;
using QMatrix = std::vector<QVec>;

/// Row-reduces a copy of m and returns its rank.
inline int rank(QMatrix m) {
    int rows = static_cast<int>(m.size());
    if (!rows) return 0;
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Solves A x = b (A is rows x cols, given row-major); returns nullopt when inconsistent.
/// Free variables are set to zero.
inline std::optional<QVec> solve(QMatrix a, QVec b) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = 1 / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    QVec x(cols, 0);
    for (int i = 0; i < r; ++i) x[pivcol[i]] = b[i];
    return x;
}

/// Inverse of a square matrix; throws if singular.
inline QMatrix inverse(const QMatrix& a) {
    int n = static_cast<int>(a.size());
    QMatrix m(n, QVec(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    QMatrix r(n, QVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = m[i][n + j];
    return r;
}

/// Greedy selection of linearly independent vectors, in the order offered.
class IncrementalBasis {
public:
    explicit IncrementalBasis(int dim) : dim_(dim) {}

    /// Returns true (and keeps v) if v is independent of the vectors kept so far.
    bool add(const QVec& v) {
        QVec w = v;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            int c = piv_[k];
            if (w[c] == 0) continue;
            Rational f = w[c];
            for (int j = 0; j < dim_; ++j) w[j] -= f * rows_[k][j];
        }
        int c = 0;
        while (c < dim_ && w[c] == 0) ++c;
        if (c == dim_) return false;
        Rational inv = 1 / w[c];
        for (auto& x : w) x *= inv;
        for (auto& row : rows_) {
            if (row[c] == 0) continue;
            Rational f = row[c];
            for (int j = 0; j < dim_; ++j) row[j] -= f * w[j];
        }
        rows_.push_back(std::move(w));
        piv_.push_back(c);
        return true;
    }
    int size() const { return static_cast<int>(rows_.size()); }

private:
    int dim_;
    std::vector<QVec> rows_;
    std::vector<int> piv_;
};

}  // namespace affqh
