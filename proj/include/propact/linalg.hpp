/*
   Copyright 2026 The propact Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Exact linear algebra over Q on row-stored dense matrices, plus an
// integer fast path used by the Weyl-orbit scans.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "propact/rational.hpp"

namespace propact {

using QMatrix = std::vector<QVector>;
using ZMatrix = std::vector<ZVector>;

struct RowEchelon {
    QMatrix rows;              // nonzero rows only, reduced
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Zero entries are skipped, which keeps the
/// sparse defining systems of the classical algebras cheap.
inline RowEchelon rref(QMatrix m, std::size_t ncols)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        if (m[row][col] != 1) {
            Rational inv = 1 / m[row][col];
            for (std::size_t c = col; c < ncols; ++c)
                if (sgn(m[row][c]) != 0) m[row][c] *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                if (sgn(m[row][c]) != 0) m[r][c] -= f * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

inline std::size_t rank(const QMatrix& m, std::size_t ncols) { return rref(m, ncols).pivots.size(); }

inline std::size_t rank(const QMatrix& m)
{
    return m.empty() ? 0 : rank(m, m.front().size());
}

/// Basis of {x : m x = 0}.
inline QMatrix nullspace(const QMatrix& m, std::size_t ncols)
{
    auto e = rref(m, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    QMatrix basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        QVector v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rows of a maximal linearly independent subset, in the reduced form.
inline QMatrix row_basis(const QMatrix& m, std::size_t ncols) { return rref(m, ncols).rows; }

inline QVector mat_vec(const QMatrix& m, std::span<const Rational> v)
{
    QVector out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

inline ZMatrix to_integer_rows(const QMatrix& m)
{
    ZMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(primitive(row));
    return out;
}

namespace detail {

inline bool checked_mul_sub(__int128 a, __int128 b, __int128 c, __int128 d, __int128& out)
{
    __int128 x, y;
    if (__builtin_mul_overflow(a, b, &x) || __builtin_mul_overflow(c, d, &y)) return false;
    return !__builtin_sub_overflow(x, y, &out);
}

} // namespace detail

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Falls back to exact rationals if an intermediate would overflow.
inline std::size_t integer_rank(const ZMatrix& m, std::size_t ncols)
{
    std::vector<std::vector<__int128>> a(m.size(), std::vector<__int128>(ncols));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j) a[i][j] = m[i][j];
    __int128 prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t piv = row;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t r = row + 1; r < a.size(); ++r) {
            for (std::size_t c = col + 1; c < ncols; ++c) {
                __int128 v;
                if (!detail::checked_mul_sub(a[row][col], a[r][c], a[r][col], a[row][c], v)) {
                    QMatrix q;
                    for (const auto& zr : m) q.push_back(to_q(zr));
                    return rank(q, ncols);
                }
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return row;
}

// --- floating point helpers -------------------------------------------------

using DVector = std::vector<double>;
using DMatrix = std::vector<DVector>;

inline double norm2(std::span<const double> v)
{
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

inline DMatrix identity(std::size_t n)
{
    DMatrix m(n, DVector(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline DMatrix matmul(const DMatrix& a, const DMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    DMatrix c(n, DVector(p, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            double f = a[i][l];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < p; ++j) c[i][j] += f * b[l][j];
        }
    return c;
}

inline DMatrix transpose(const DMatrix& a)
{
    if (a.empty()) return {};
    DMatrix t(a[0].size(), DVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

struct LuResult {
    DMatrix lu;
    std::vector<std::size_t> row_perm, col_perm;
    double log_abs_det = 0.0;
    double min_pivot = 0.0;
    double max_pivot = 0.0;
};

/// Gaussian elimination with complete pivoting.
inline LuResult lu_complete(DMatrix a)
{
    std::size_t n = a.size();
    LuResult r;
    r.row_perm.resize(n);
    r.col_perm.resize(n);
    std::iota(r.row_perm.begin(), r.row_perm.end(), 0);
    std::iota(r.col_perm.begin(), r.col_perm.end(), 0);
    r.min_pivot = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi = k, pj = k;
        double best = -1.0;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (std::abs(a[i][j]) > best) {
                    best = std::abs(a[i][j]);
                    pi = i;
                    pj = j;
                }
        std::swap(a[k], a[pi]);
        std::swap(r.row_perm[k], r.row_perm[pi]);
        for (auto& row : a) std::swap(row[k], row[pj]);
        std::swap(r.col_perm[k], r.col_perm[pj]);
        r.min_pivot = std::min(r.min_pivot, best);
        r.max_pivot = std::max(r.max_pivot, best);
        if (best == 0.0) {
            r.log_abs_det = -std::numeric_limits<double>::infinity();
            break;
        }
        r.log_abs_det += std::log(best);
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = a[i][k] / a[k][k];
            a[i][k] = f;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    if (n == 0) r.min_pivot = 0.0;
    r.lu = std::move(a);
    return r;
}

/// Inverse via complete-pivot LU; caller guarantees non-singularity.
inline DMatrix inverse(const DMatrix& a)
{
    std::size_t n = a.size();
    auto f = lu_complete(a);
    DMatrix inv(n, DVector(n, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        // solve (P A Q) y = P e_col, x = Q y
        DVector b(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) b[i] = f.row_perm[i] == col ? 1.0 : 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) b[i] -= f.lu[i][j] * b[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) b[i] -= f.lu[i][j] * b[j];
            b[i] /= f.lu[i][i];
        }
        for (std::size_t i = 0; i < n; ++i) inv[f.col_perm[i]][col] = b[i];
    }
    return inv;
}

} // namespace propact
