// Small dense exact linear algebra over the rationals: rank, solve,
// inverse.  Matrix sizes in this project stay well below 100x100 per
// weight block, so plain fraction-based Gaussian elimination is fine.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chevalley/numeric.hpp"

namespace chevalley {

using RatMatrix = std::vector<RatVec>;

inline RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
    RatVec out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMatrix out(n, RatVec(m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

// In-place row echelon reduction; returns pivot columns.
inline std::vector<std::size_t> row_echelon(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return row_echelon(m).size(); }

// Solves M x = b.  Returns one solution (free variables set to 0), or
// nullopt when inconsistent.
inline std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    RatMatrix aug(rows, RatVec(cols + 1, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = row_echelon(aug);
    for (std::size_t p = 0; p < pivots.size(); ++p)
        if (pivots[p] == cols) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug[p][cols];
    return x;
}

inline RatMatrix invert(const RatMatrix& m) {
    std::size_t n = m.size();
    RatMatrix aug(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto pivots = row_echelon(aug);
    if (pivots.size() != n) throw std::invalid_argument("matrix not invertible");
    RatMatrix out(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
    return out;
}

}  // namespace chevalley
