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

#include <optional>

#include "propact/linalg.hpp"

namespace propact {

/// Finds z >= 0 with A z = b by a phase-one simplex over Q.
/// Bland's rule makes it terminate; arithmetic is exact, so a nullopt is a
/// proof of infeasibility (up to the correctness of this routine).
inline std::optional<QVector> find_nonnegative_solution(const QMatrix& a, const QVector& b)
{
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (m == 0) return QVector(n, Rational(0));

    // Tableau: columns [0, n) structural, [n, n + m) artificial, last = rhs.
    const std::size_t width = n + m + 1;
    QMatrix t(m, QVector(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        bool flip = sgn(b[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // reduced costs of the phase-one objective sum(artificials)
    QVector cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= t[i][width - 1];

    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break; // unbounded direction; cannot happen for phase one
        Rational piv = t[leave][enter];
        for (auto& x : t[leave])
            if (sgn(x) != 0) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j)
                if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
        }
        if (sgn(cost[enter]) != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j)
                if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (sgn(cost[width - 1]) != 0) return std::nullopt;
    QVector z(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) z[basis[i]] = t[i][width - 1];
    return z;
}

} // namespace propact
