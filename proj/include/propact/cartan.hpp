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

// Classical matrix Lie algebras with their Cartan splitting g = k + p for
// the involution theta(X) = -X^T, and the numeric Cartan projection of
// GL(n,R). Complex algebras are realified: Z = A + iB is stored as the
// real block matrix [[A, -B], [B, A]].

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "propact/linalg.hpp"

namespace propact {

enum class GroupFamily { SL_R, GL_R, SO, SU, Sp_R, U };

/// SL_R(n), GL_R(n), Sp_R(2n) use `n`; SO/SU/U(p,q) use `p`, `q`.
struct MatrixGroupSpec {
    GroupFamily family = GroupFamily::SL_R;
    int n = 0;
    int p = 0;
    int q = 0;

    static MatrixGroupSpec sl(int n) { return {GroupFamily::SL_R, n, 0, 0}; }
    static MatrixGroupSpec gl(int n) { return {GroupFamily::GL_R, n, 0, 0}; }
    static MatrixGroupSpec sp(int n) { return {GroupFamily::Sp_R, n, 0, 0}; }
    static MatrixGroupSpec so(int p, int q) { return {GroupFamily::SO, 0, p, q}; }
    static MatrixGroupSpec su(int p, int q) { return {GroupFamily::SU, 0, p, q}; }
    static MatrixGroupSpec u(int p, int q) { return {GroupFamily::U, 0, p, q}; }

    bool uses_signature() const
    {
        return family == GroupFamily::SO || family == GroupFamily::SU || family == GroupFamily::U;
    }
    bool is_complex() const { return family == GroupFamily::SU || family == GroupFamily::U; }

    void validate() const
    {
        if (uses_signature()) {
            if (p < 0 || q < 0 || p + q < 1) fail(Errc::invalid_argument, "need p, q >= 0 and p + q >= 1");
        } else if (n < 1) {
            fail(Errc::invalid_argument, "need n >= 1");
        }
    }

    /// Size of the (realified) defining matrices.
    int matrix_size() const
    {
        switch (family) {
        case GroupFamily::SL_R:
        case GroupFamily::GL_R: return n;
        case GroupFamily::Sp_R: return 2 * n;
        case GroupFamily::SO: return p + q;
        case GroupFamily::SU:
        case GroupFamily::U: return 2 * (p + q);
        }
        return 0;
    }

    friend bool operator==(const MatrixGroupSpec&, const MatrixGroupSpec&) = default;
};

inline std::string to_string(GroupFamily f)
{
    switch (f) {
    case GroupFamily::SL_R: return "SL";
    case GroupFamily::GL_R: return "GL";
    case GroupFamily::SO: return "SO";
    case GroupFamily::SU: return "SU";
    case GroupFamily::Sp_R: return "Sp";
    case GroupFamily::U: return "U";
    }
    return "?";
}

inline GroupFamily parse_group_family(const std::string& s)
{
    if (s == "SL") return GroupFamily::SL_R;
    if (s == "GL") return GroupFamily::GL_R;
    if (s == "SO" || s == "O") return GroupFamily::SO;
    if (s == "SU") return GroupFamily::SU;
    if (s == "Sp") return GroupFamily::Sp_R;
    if (s == "U") return GroupFamily::U;
    fail(Errc::unsupported_family, "unknown group family \"" + s + "\"");
}

inline std::string describe(const MatrixGroupSpec& s)
{
    switch (s.family) {
    case GroupFamily::SL_R: return "SL(" + std::to_string(s.n) + ",R)";
    case GroupFamily::GL_R: return "GL(" + std::to_string(s.n) + ",R)";
    case GroupFamily::Sp_R: return "Sp(" + std::to_string(2 * s.n) + ",R)";
    default: return to_string(s.family) + "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
    }
}

struct LieAlgebraBasis {
    std::size_t ambient_dim = 0;
    std::vector<QMatrix> basis;
    std::vector<std::size_t> k_part;
    std::vector<std::size_t> p_part;

    std::size_t dim() const { return basis.size(); }
};

inline QVector flatten(const QMatrix& m)
{
    QVector v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
}

inline QMatrix flatten_all(const std::vector<QMatrix>& ms)
{
    QMatrix out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(flatten(m));
    return out;
}

inline QMatrix transpose(const QMatrix& m)
{
    if (m.empty()) return {};
    QMatrix t(m[0].size(), QVector(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline QMatrix matmul(const QMatrix& a, const QMatrix& b)
{
    std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    QMatrix c(n, QVector(p, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (sgn(a[i][l]) == 0) continue;
            for (std::size_t j = 0; j < p; ++j)
                if (sgn(b[l][j]) != 0) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline QMatrix commutator(const QMatrix& a, const QMatrix& b)
{
    QMatrix ab = matmul(a, b), ba = matmul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab[i].size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

namespace detail {

/// Sparse builder for one basis element: a list of (row, col, value).
struct Entries {
    std::vector<std::tuple<std::size_t, std::size_t, int>> real, imag;
    Entries& re(std::size_t i, std::size_t j, int v)
    {
        real.emplace_back(i, j, v);
        return *this;
    }
    Entries& im(std::size_t i, std::size_t j, int v)
    {
        imag.emplace_back(i, j, v);
        return *this;
    }
};

inline QMatrix materialize(const Entries& e, std::size_t n, bool complex)
{
    std::size_t size = complex ? 2 * n : n;
    QMatrix m(size, QVector(size, Rational(0)));
    for (auto [i, j, v] : e.real) {
        m[i][j] += v;
        if (complex) m[n + i][n + j] += v;
    }
    for (auto [i, j, v] : e.imag) {
        m[i][n + j] -= v;
        m[n + i][j] += v;
    }
    return m;
}

inline void build_unitary(std::size_t p, std::size_t q, bool special, std::vector<Entries>& k,
                          std::vector<Entries>& pp)
{
    std::size_t n = p + q;
    auto same_block = [&](std::size_t i, std::size_t j) { return (i < p) == (j < p); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (same_block(i, j)) {
                k.push_back(Entries{}.re(i, j, 1).re(j, i, -1));
                k.push_back(Entries{}.im(i, j, 1).im(j, i, 1));
            } else {
                pp.push_back(Entries{}.re(i, j, 1).re(j, i, 1));
                pp.push_back(Entries{}.im(i, j, 1).im(j, i, -1));
            }
        }
    if (special) {
        for (std::size_t i = 0; i + 1 < n; ++i) k.push_back(Entries{}.im(i, i, 1).im(i + 1, i + 1, -1));
    } else {
        for (std::size_t i = 0; i < n; ++i) k.push_back(Entries{}.im(i, i, 1));
    }
}

} // namespace detail

/// Explicit basis of g, listed k-part first, then p-part.
inline LieAlgebraBasis lie_algebra_basis(const MatrixGroupSpec& spec)
{
    spec.validate();
    using detail::Entries;
    std::vector<Entries> k, pp;
    std::size_t n = 0;
    bool complex = false;
    switch (spec.family) {
    case GroupFamily::SL_R:
    case GroupFamily::GL_R: {
        n = static_cast<std::size_t>(spec.n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                k.push_back(Entries{}.re(i, j, 1).re(j, i, -1));
                pp.push_back(Entries{}.re(i, j, 1).re(j, i, 1));
            }
        if (spec.family == GroupFamily::GL_R) {
            for (std::size_t i = 0; i < n; ++i) pp.push_back(Entries{}.re(i, i, 1));
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) pp.push_back(Entries{}.re(i, i, 1).re(i + 1, i + 1, -1));
        }
        break;
    }
    case GroupFamily::SO: {
        std::size_t p = static_cast<std::size_t>(spec.p);
        n = p + static_cast<std::size_t>(spec.q);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if ((i < p) == (j < p))
                    k.push_back(Entries{}.re(i, j, 1).re(j, i, -1));
                else
                    pp.push_back(Entries{}.re(i, j, 1).re(j, i, 1));
            }
        break;
    }
    case GroupFamily::SU:
    case GroupFamily::U:
        complex = true;
        n = static_cast<std::size_t>(spec.p + spec.q);
        detail::build_unitary(static_cast<std::size_t>(spec.p), static_cast<std::size_t>(spec.q),
                              spec.family == GroupFamily::SU, k, pp);
        break;
    case GroupFamily::Sp_R: {
        std::size_t h = static_cast<std::size_t>(spec.n);
        n = 2 * h;
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i; j < h; ++j) {
                if (i != j) {
                    // [[A, 0], [0, A]] with A antisymmetric
                    k.push_back(Entries{}.re(i, j, 1).re(j, i, -1).re(h + i, h + j, 1).re(h + j, h + i, -1));
                    // [[0, B], [-B, 0]] with B symmetric
                    k.push_back(Entries{}.re(i, h + j, 1).re(j, h + i, 1).re(h + i, j, -1).re(h + j, i, -1));
                    // [[A, 0], [0, -A]] with A symmetric
                    pp.push_back(Entries{}.re(i, j, 1).re(j, i, 1).re(h + i, h + j, -1).re(h + j, h + i, -1));
                    // [[0, B], [B, 0]] with B symmetric
                    pp.push_back(Entries{}.re(i, h + j, 1).re(j, h + i, 1).re(h + i, j, 1).re(h + j, i, 1));
                } else {
                    k.push_back(Entries{}.re(i, h + i, 1).re(h + i, i, -1));
                    pp.push_back(Entries{}.re(i, i, 1).re(h + i, h + i, -1));
                    pp.push_back(Entries{}.re(i, h + i, 1).re(h + i, i, 1));
                }
            }
        break;
    }
    }
    LieAlgebraBasis out;
    out.ambient_dim = complex ? 2 * n : n;
    for (const auto& e : k) {
        out.k_part.push_back(out.basis.size());
        out.basis.push_back(detail::materialize(e, n, complex));
    }
    for (const auto& e : pp) {
        out.p_part.push_back(out.basis.size());
        out.basis.push_back(detail::materialize(e, n, complex));
    }
    return out;
}

struct CartanDims {
    std::size_t dim_k = 0;
    std::size_t dim_p = 0;
    friend bool operator==(const CartanDims&, const CartanDims&) = default;
};

inline CartanDims cartan_dims(const MatrixGroupSpec& spec)
{
    auto b = lie_algebra_basis(spec);
    return {b.k_part.size(), b.p_part.size()};
}

/// Moves a basis into a larger matrix algebra: entry (i, j) goes to
/// (index_map[i], index_map[j]) of an N x N zero matrix.
inline LieAlgebraBasis embed_basis(const LieAlgebraBasis& h, std::span<const std::size_t> index_map, std::size_t N)
{
    if (index_map.size() != h.ambient_dim) fail(Errc::dimension_mismatch, "index map size differs from basis size");
    LieAlgebraBasis out;
    out.ambient_dim = N;
    out.k_part = h.k_part;
    out.p_part = h.p_part;
    for (const auto& m : h.basis) {
        QMatrix big(N, QVector(N, Rational(0)));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) big[index_map[i]][index_map[j]] = m[i][j];
        out.basis.push_back(std::move(big));
    }
    return out;
}

struct PairSignature {
    std::size_t d_X = 0;
    std::size_t e_X = 0;
    friend bool operator==(const PairSignature&, const PairSignature&) = default;
};

namespace detail {

inline std::size_t intersection_dim(const QMatrix& a, const QMatrix& b, std::size_t ncols)
{
    QMatrix both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(a, ncols) + rank(b, ncols) - rank(both, ncols);
}

inline QMatrix select(const QMatrix& flat, std::span<const std::size_t> idx)
{
    QMatrix out;
    for (auto i : idx) out.push_back(flat[i]);
    return out;
}

} // namespace detail

/// d(X) = dim p / (h cap p), e(X) = dim k / (h cap k) for X = G/H.
inline PairSignature pair_signature(const MatrixGroupSpec& g_spec, const LieAlgebraBasis& h)
{
    auto g = lie_algebra_basis(g_spec);
    if (h.ambient_dim != g.ambient_dim)
        fail(Errc::not_a_subalgebra, "h matrices are " + std::to_string(h.ambient_dim) + "x" +
                                         std::to_string(h.ambient_dim) + ", g matrices are " +
                                         std::to_string(g.ambient_dim));
    const std::size_t cols = g.ambient_dim * g.ambient_dim;
    QMatrix gf = flatten_all(g.basis), hf = flatten_all(h.basis);
    if (detail::intersection_dim(gf, hf, cols) != rank(hf, cols))
        fail(Errc::not_a_subalgebra, "h is not contained in the span of g");
    std::size_t hp = detail::intersection_dim(detail::select(gf, g.p_part), hf, cols);
    std::size_t hk = detail::intersection_dim(detail::select(gf, g.k_part), hf, cols);
    return {g.p_part.size() - hp, g.k_part.size() - hk};
}

inline int real_rank(const MatrixGroupSpec& spec)
{
    spec.validate();
    switch (spec.family) {
    case GroupFamily::SL_R: return spec.n - 1;
    case GroupFamily::GL_R: return spec.n;
    case GroupFamily::Sp_R: return spec.n;
    default: return std::min(spec.p, spec.q);
    }
}

/// Dimension of a maximal abelian subspace of p, grown greedily from the
/// basis: every maximal abelian subspace of p has the same dimension.
inline int real_rank_from_basis(const LieAlgebraBasis& g)
{
    const std::size_t cols = g.ambient_dim * g.ambient_dim;
    std::vector<QMatrix> p;
    for (auto i : g.p_part) p.push_back(g.basis[i]);
    QMatrix chosen; // coordinates in the p basis
    std::vector<QMatrix> chosen_mats;
    for (;;) {
        // centralizer of span(chosen) inside p
        QMatrix system; // rows: one per matrix entry per chosen element
        for (const auto& a : chosen_mats) {
            std::vector<QVector> cols_of(p.size());
            for (std::size_t k = 0; k < p.size(); ++k) cols_of[k] = flatten(commutator(p[k], a));
            for (std::size_t e = 0; e < cols; ++e) {
                QVector row(p.size());
                bool nz = false;
                for (std::size_t k = 0; k < p.size(); ++k) {
                    row[k] = cols_of[k][e];
                    nz = nz || sgn(row[k]) != 0;
                }
                if (nz) system.push_back(std::move(row));
            }
        }
        QMatrix centralizer = nullspace(system, p.size());
        const std::size_t current = rank(chosen, p.size());
        bool grew = false;
        for (const auto& c : centralizer) {
            QMatrix trial = chosen;
            trial.push_back(c);
            if (rank(trial, p.size()) > current) {
                chosen.push_back(c);
                QMatrix m(g.ambient_dim, QVector(g.ambient_dim, Rational(0)));
                for (std::size_t k = 0; k < p.size(); ++k)
                    if (sgn(c[k]) != 0)
                        for (std::size_t i = 0; i < m.size(); ++i)
                            for (std::size_t j = 0; j < m.size(); ++j)
                                if (sgn(p[k][i][j]) != 0) m[i][j] += c[k] * p[k][i][j];
                chosen_mats.push_back(std::move(m));
                grew = true;
                break;
            }
        }
        if (!grew) return static_cast<int>(current);
    }
}

// --- numeric Cartan projection for GL(n,R) ---------------------------------

/// Singular values by one-sided (Hestenes) Jacobi on the rows of a,
/// descending. Works on a itself rather than a^T a, so small singular values
/// keep their relative accuracy.
inline DVector singular_values(DMatrix a, int max_sweeps = 80)
{
    const std::size_t n = a.size();
    constexpr double eps = 1e-15;
    auto dot_rows = [&](std::size_t i, std::size_t j) {
        double s = 0;
        for (std::size_t k = 0; k < a[i].size(); ++k) s += a[i][k] * a[j][k];
        return s;
    };
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = dot_rows(p, p), beta = dot_rows(q, q), gamma = dot_rows(p, q);
                if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
                for (std::size_t k = 0; k < a[p].size(); ++k) {
                    double x = a[p][k], y = a[q][k];
                    a[p][k] = c * x - s * y;
                    a[q][k] = s * x + c * y;
                }
            }
        if (!rotated) break;
    }
    DVector sv(n);
    for (std::size_t i = 0; i < n; ++i) sv[i] = std::sqrt(dot_rows(i, i));
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

/// Ratio below which the smallest complete-pivoting pivot marks g singular.
inline constexpr double kSingularTolerance = 1e-12;

inline void require_square(const DMatrix& g)
{
    if (g.empty()) fail(Errc::invalid_argument, "empty matrix");
    for (const auto& row : g)
        if (row.size() != g.size()) fail(Errc::invalid_argument, "matrix is not square");
}

/// mu(g) = 1/2 log of the eigenvalues of g^T g (the log singular values),
/// in descending order.
inline DVector cartan_projection_gl(const DMatrix& g, double tol_sing = kSingularTolerance)
{
    require_square(g);
    auto lu = lu_complete(g);
    if (!(lu.min_pivot > tol_sing * lu.max_pivot))
        fail(Errc::singular_matrix, "smallest pivot below tolerance");
    auto sv = singular_values(g);
    DVector mu(sv.size());
    for (std::size_t i = 0; i < sv.size(); ++i) {
        if (!(sv[i] > 0.0)) fail(Errc::singular_matrix, "zero singular value");
        mu[i] = std::log(sv[i]);
    }
    return mu;
}

inline double log_abs_det(const DMatrix& g)
{
    require_square(g);
    return lu_complete(g).log_abs_det;
}

} // namespace propact
