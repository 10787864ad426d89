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

// Brute-force references shared by the unit tests. Nothing here calls the
// code under test for the quantity it checks.

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "propact/linalg.hpp"
#include "propact/random.hpp"
#include "propact/rational.hpp"

namespace propact::ref {

/// Every signed permutation matrix of size n (as row lists), filtered by
/// the family's sign rule: A none, D an even number of minus signs.
inline std::set<ZMatrix> signed_permutations(std::size_t n, char family)
{
    std::set<ZMatrix> out;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::uint64_t patterns = family == 'A' ? 1 : (std::uint64_t{1} << n);
        for (std::uint64_t s = 0; s < patterns; ++s) {
            if (family == 'D' && std::popcount(s) % 2) continue;
            ZMatrix m(n, ZVector(n, 0));
            for (std::size_t i = 0; i < n; ++i) m[perm[i]][i] = (s >> i) & 1u ? -1 : 1;
            out.insert(m);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// dim(U cap V) = dim U + dim V - dim(U + V).
inline std::size_t meet_dim(const QMatrix& u, const QMatrix& v, std::size_t n)
{
    QMatrix both = u;
    both.insert(both.end(), v.begin(), v.end());
    return rank(u, n) + rank(v, n) - rank(both, n);
}

/// A permuted copy of `ray` lies in {x : x_i = 0 for i >= m} for some
/// permutation, tried one by one.
inline bool sl2_meets_brute(ZVector ray, int m)
{
    std::sort(ray.begin(), ray.end());
    do {
        bool tail_zero = true;
        for (std::size_t i = static_cast<std::size_t>(m); i < ray.size(); ++i) tail_zero &= ray[i] == 0;
        if (tail_zero) return true;
    } while (std::next_permutation(ray.begin(), ray.end()));
    return false;
}

inline QVector random_rational_vector(std::size_t n, SequentialStream& rng, long range = 9)
{
    QVector v(n);
    for (auto& x : v) x = make_rational(rng.integer(-range, range), rng.integer(1, 4));
    return v;
}

/// Projection onto the trace-zero hyperplane, scaled to stay integral.
inline QVector trace_free(QVector v)
{
    Rational mean = 0;
    for (const auto& x : v) mean += x;
    mean /= static_cast<long>(v.size());
    for (auto& x : v) x -= mean;
    return v;
}

/// Product of n random Householder reflections (an orthogonal matrix).
inline DMatrix householder_orthogonal(std::size_t n, SequentialStream& rng)
{
    DMatrix q = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> v(n);
        double norm = 0;
        for (auto& x : v) {
            x = rng.normal();
            norm += x * x;
        }
        norm = std::sqrt(norm);
        DMatrix h = identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) h[i][j] -= 2 * v[i] * v[j] / (norm * norm);
        q = matmul(q, h);
    }
    return q;
}

} // namespace propact::ref
