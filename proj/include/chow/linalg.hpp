#pragma once
#include <optional>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row major

// In-place reduced row echelon form with deterministic pivoting (leftmost
// column, topmost nonzero row).  Returns the pivot columns.
inline std::vector<int> rref(RatMat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    size_t rows = a.size(), cols = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t sel = r;
        while (sel < rows && a[sel][c] == 0) sel++;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        Rat inv = 1 / a[r][c];
        for (size_t j = c; j < cols; j++) a[r][j] *= inv;
        for (size_t i = 0; i < rows; i++) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (size_t j = c; j < cols; j++) a[i][j] -= f * a[r][j];
        }
        pivots.push_back((int)c);
        r++;
    }
    return pivots;
}

inline int rank(RatMat a) { return (int)rref(a).size(); }

// Solve A x = b; returns the particular solution with all free variables set
// to zero, or nullopt if the system is inconsistent.
inline std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    RatMat aug(rows, RatVec(cols + 1));
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == (int)cols) return std::nullopt;  // 0 = 1 row
    RatVec x(cols, Rat(0));
    for (size_t i = 0; i < pivots.size(); i++) x[pivots[i]] = aug[i][cols];
    return x;
}

// Basis of the kernel of A, one vector per free column (deterministic order).
inline std::vector<RatVec> nullspace(const RatMat& a) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    RatMat m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (size_t fc = 0; fc < cols; fc++) {
        if (is_pivot[fc]) continue;
        RatVec v(cols, Rat(0));
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); i++) v[pivots[i]] = -m[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace chow
