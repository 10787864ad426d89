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

// Exact geometry in a = Q^r: subspaces, finitely generated cones and finite
// unions of them. Two closed cones are "transversal" here exactly when they
// meet only at the origin.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <variant>
#include <vector>

#include "propact/lp.hpp"
#include "propact/parallel.hpp"
#include "propact/rootdata.hpp"

namespace propact {

/// A linear subspace, stored by the reduced row echelon form of a basis so
/// that equal subspaces compare equal.
class RationalSubspace {
public:
    RationalSubspace() = default;
    /// The zero subspace of Q^ambient_dim.
    explicit RationalSubspace(std::size_t ambient_dim) : ambient_(ambient_dim)
    {
        annihilator_.assign(ambient_dim, QVector(ambient_dim, Rational(0)));
        for (std::size_t i = 0; i < ambient_dim; ++i) annihilator_[i][i] = 1;
    }

    static RationalSubspace span(const QMatrix& vectors, std::size_t ambient_dim)
    {
        for (const auto& v : vectors)
            if (v.size() != ambient_dim) fail(Errc::dimension_mismatch, "spanning vector has wrong length");
        RationalSubspace s;
        s.ambient_ = ambient_dim;
        s.basis_ = row_basis(vectors, ambient_dim);
        s.annihilator_ = nullspace(s.basis_, ambient_dim);
        return s;
    }

    static RationalSubspace span(const std::vector<ZVector>& vectors, std::size_t ambient_dim)
    {
        QMatrix q;
        for (const auto& v : vectors) q.push_back(to_q(v));
        return span(q, ambient_dim);
    }

    static RationalSubspace whole(std::size_t ambient_dim)
    {
        QMatrix id(ambient_dim, QVector(ambient_dim, Rational(0)));
        for (std::size_t i = 0; i < ambient_dim; ++i) id[i][i] = 1;
        return span(id, ambient_dim);
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const QMatrix& basis() const { return basis_; }
    bool is_zero() const { return basis_.empty(); }

    /// Rows whose common kernel is this subspace.
    const QMatrix& annihilator() const { return annihilator_; }

    bool contains(std::span<const Rational> v) const
    {
        if (v.size() != ambient_) return false;
        for (const auto& row : annihilator_)
            if (sgn(dot(row, v)) != 0) return false;
        return true;
    }

    bool contains(const RationalSubspace& other) const
    {
        const auto& ann = annihilator_;
        for (const auto& v : other.basis_)
            for (const auto& row : ann)
                if (sgn(dot(row, v)) != 0) return false;
        return true;
    }

    RationalSubspace transformed(const WeylElement& w) const
    {
        QMatrix moved;
        for (const auto& v : basis_) moved.push_back(w.apply(v));
        return span(moved, ambient_);
    }

    friend bool operator==(const RationalSubspace& a, const RationalSubspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    QMatrix basis_;
    QMatrix annihilator_;
};

/// Exact U cap V via the kernel of ann(U) restricted to V.
inline RationalSubspace subspace_intersection(const RationalSubspace& u, const RationalSubspace& v)
{
    if (u.ambient_dim() != v.ambient_dim()) fail(Errc::dimension_mismatch, "subspaces live in different ambients");
    const auto& vb = v.basis();
    if (vb.empty()) return RationalSubspace(u.ambient_dim());
    QMatrix restricted; // ann(U) * V^T
    for (const auto& row : u.annihilator()) {
        QVector r;
        for (const auto& b : vb) r.push_back(dot(row, b));
        restricted.push_back(std::move(r));
    }
    QMatrix coeffs = nullspace(restricted, vb.size());
    QMatrix vectors;
    for (const auto& c : coeffs) {
        QVector x(u.ambient_dim(), Rational(0));
        for (std::size_t j = 0; j < vb.size(); ++j)
            if (sgn(c[j]) != 0)
                for (std::size_t i = 0; i < x.size(); ++i) x[i] += c[j] * vb[j][i];
        vectors.push_back(std::move(x));
    }
    return RationalSubspace::span(vectors, u.ambient_dim());
}

/// Conic hull of finitely many nonzero generators.
struct PolyCone {
    std::size_t ambient_dim = 0;
    QMatrix generators;

    static PolyCone hull(QMatrix gens, std::size_t ambient_dim)
    {
        for (const auto& g : gens) {
            if (g.size() != ambient_dim) fail(Errc::dimension_mismatch, "generator has wrong length");
            if (propact::is_zero(std::span<const Rational>(g)))
                fail(Errc::invalid_argument, "cone generators must be nonzero");
        }
        return {ambient_dim, std::move(gens)};
    }

    static PolyCone ray(const QVector& v) { return hull({v}, v.size()); }

    static PolyCone from_subspace(const RationalSubspace& s)
    {
        PolyCone c{s.ambient_dim(), {}};
        for (const auto& b : s.basis()) {
            c.generators.push_back(b);
            QVector neg = b;
            for (auto& x : neg) x = -x;
            c.generators.push_back(std::move(neg));
        }
        return c;
    }
};

using ConeMember = std::variant<PolyCone, RationalSubspace>;

class ConeUnion {
public:
    ConeUnion() = default;
    explicit ConeUnion(std::vector<ConeMember> members) : members_(std::move(members))
    {
        if (members_.empty()) fail(Errc::invalid_argument, "a cone union needs at least one member");
        std::size_t d = ambient_of(members_.front());
        for (const auto& m : members_)
            if (ambient_of(m) != d) fail(Errc::dimension_mismatch, "cone union members differ in ambient dimension");
    }

    static std::size_t ambient_of(const ConeMember& m)
    {
        return std::visit([](const auto& x) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PolyCone>)
                return x.ambient_dim;
            else
                return x.ambient_dim();
        }, m);
    }

    const std::vector<ConeMember>& members() const { return members_; }
    std::size_t ambient_dim() const { return ambient_of(members_.front()); }

    bool all_subspaces() const
    {
        return std::all_of(members_.begin(), members_.end(),
                           [](const auto& m) { return std::holds_alternative<RationalSubspace>(m); });
    }

private:
    std::vector<ConeMember> members_;
};

struct ConeIntersection {
    bool nontrivial = false;
    ZVector witness;     // primitive direction of a common nonzero point
    QVector point;       // the point itself
    QVector c_coeffs;    // point = sum c_i * C.generators[i], c >= 0
    QVector d_coeffs;    // point = sum d_j * D.generators[j], d >= 0
};

/// Decides whether C cap D contains a nonzero point. A nonzero point can be
/// scaled so that some coordinate equals +1 or -1, so 2r exact feasibility
/// problems settle the question even for cones that contain lines.
inline ConeIntersection cones_intersect_nontrivially(const PolyCone& c, const PolyCone& d)
{
    if (c.ambient_dim != d.ambient_dim) fail(Errc::dimension_mismatch, "cones live in different ambients");
    const std::size_t r = c.ambient_dim, nc = c.generators.size(), nd = d.generators.size();
    ConeIntersection out;
    if (nc == 0 || nd == 0) return out;
    for (std::size_t k = 0; k < r; ++k)
        for (int s : {1, -1}) {
            QMatrix a(r + 1, QVector(nc + nd, Rational(0)));
            QVector b(r + 1, Rational(0));
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < nc; ++j) a[i][j] = c.generators[j][i];
                for (std::size_t j = 0; j < nd; ++j) a[i][nc + j] = -d.generators[j][i];
            }
            for (std::size_t j = 0; j < nc; ++j) a[r][j] = c.generators[j][k];
            b[r] = s;
            auto z = find_nonnegative_solution(a, b);
            if (!z) continue;
            out.nontrivial = true;
            out.c_coeffs.assign(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(nc));
            out.d_coeffs.assign(z->begin() + static_cast<std::ptrdiff_t>(nc), z->end());
            out.point.assign(r, Rational(0));
            for (std::size_t j = 0; j < nc; ++j)
                for (std::size_t i = 0; i < r; ++i) out.point[i] += out.c_coeffs[j] * c.generators[j][i];
            out.witness = primitive(out.point);
            return out;
        }
    return out;
}

/// Exact re-check of an intersection certificate.
inline bool verify_intersection(const PolyCone& c, const PolyCone& d, const ConeIntersection& w)
{
    if (!w.nontrivial) return false;
    if (w.c_coeffs.size() != c.generators.size() || w.d_coeffs.size() != d.generators.size()) return false;
    if (propact::is_zero(std::span<const Rational>(w.point))) return false;
    auto combine = [](const QMatrix& gens, const QVector& coeffs, std::size_t r) {
        QVector x(r, Rational(0));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (sgn(coeffs[j]) < 0) return std::optional<QVector>{};
            for (std::size_t i = 0; i < r; ++i) x[i] += coeffs[j] * gens[j][i];
        }
        return std::optional<QVector>{x};
    };
    auto x = combine(c.generators, w.c_coeffs, c.ambient_dim);
    auto y = combine(d.generators, w.d_coeffs, d.ambient_dim);
    return x && y && *x == w.point && *y == w.point;
}

inline bool members_meet_nontrivially(const ConeMember& a, const ConeMember& b)
{
    if (auto* sa = std::get_if<RationalSubspace>(&a))
        if (auto* sb = std::get_if<RationalSubspace>(&b)) return !subspace_intersection(*sa, *sb).is_zero();
    auto as_cone = [](const ConeMember& m) {
        if (auto* s = std::get_if<RationalSubspace>(&m)) return PolyCone::from_subspace(*s);
        return std::get<PolyCone>(m);
    };
    return cones_intersect_nontrivially(as_cone(a), as_cone(b)).nontrivial;
}

/// True iff every member of A meets every member of B only at 0.
inline bool pitchfork_unions(const ConeUnion& a, const ConeUnion& b, unsigned threads = 1)
{
    if (a.ambient_dim() != b.ambient_dim()) fail(Errc::dimension_mismatch, "unions live in different ambients");
    const std::size_t na = a.members().size(), nb = b.members().size();
    const std::size_t pairs = na * nb;
    const std::size_t chunks = default_chunks(pairs, threads);
    std::vector<char> ok(chunks, 1);
    parallel_chunks(pairs, chunks, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx)
            if (members_meet_nontrivially(a.members()[idx / nb], b.members()[idx % nb])) {
                ok[chunk] = 0;
                return;
            }
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

/// Set equality of two finite unions of subspaces. A subspace lies in a
/// finite union of subspaces iff it lies in one of them.
inline bool similar_subspace_unions(const ConeUnion& a, const ConeUnion& b)
{
    if (!a.all_subspaces() || !b.all_subspaces())
        fail(Errc::mixed_members, "similarity is only decided for unions of subspaces");
    if (a.ambient_dim() != b.ambient_dim()) fail(Errc::dimension_mismatch, "unions live in different ambients");
    auto covered = [](const ConeUnion& x, const ConeUnion& y) {
        for (const auto& m : x.members()) {
            const auto& s = std::get<RationalSubspace>(m);
            bool inside = std::any_of(y.members().begin(), y.members().end(), [&](const auto& n) {
                return std::get<RationalSubspace>(n).contains(s);
            });
            if (!inside) return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

struct AsymptoticConeOptions {
    std::optional<double> radius_floor; // default: 10% of the largest norm
    double angle_merge = 1e-3;          // radians
};

/// Numeric tail directions of a point cloud, merged by single linkage on
/// angle; each cluster is represented by its deepest (largest-norm) point.
inline PolyCone asymptotic_cone(const std::vector<DVector>& points, const AsymptoticConeOptions& opt = {})
{
    if (points.empty()) fail(Errc::empty_tail, "no sample points");
    const std::size_t r = points.front().size();
    double max_norm = 0;
    for (const auto& p : points) {
        if (p.size() != r) fail(Errc::dimension_mismatch, "points differ in dimension");
        max_norm = std::max(max_norm, norm2(p));
    }
    const double floor = opt.radius_floor.value_or(0.1 * max_norm);
    std::vector<std::size_t> tail;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double nrm = norm2(points[i]);
        if (nrm > 0 && nrm >= floor) tail.push_back(i);
    }
    if (tail.empty()) fail(Errc::empty_tail, "no point reaches the radius floor");
    std::stable_sort(tail.begin(), tail.end(),
                     [&](auto x, auto y) { return norm2(points[x]) > norm2(points[y]); });

    std::vector<DVector> dirs;
    for (auto i : tail) {
        DVector u = points[i];
        double nrm = norm2(u);
        for (auto& x : u) x /= nrm;
        dirs.push_back(std::move(u));
    }
    const double cos_merge = std::cos(opt.angle_merge);
    std::vector<std::size_t> parent(dirs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            double c = 0;
            for (std::size_t k = 0; k < r; ++k) c += dirs[i][k] * dirs[j][k];
            if (c > cos_merge) {
                std::size_t a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    PolyCone cone{r, {}};
    for (std::size_t i = 0; i < dirs.size(); ++i)
        if (find(i) == i) { // roots are the smallest index, i.e. the deepest point
            QVector g;
            for (double x : dirs[i]) g.push_back(from_double(x));
            cone.generators.push_back(std::move(g));
        }
    return cone;
}

namespace detail {

inline DMatrix orthonormal_rows(const QMatrix& basis)
{
    DMatrix q;
    for (const auto& b : basis) {
        DVector v = to_double(b);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& e : q) {
                double c = 0;
                for (std::size_t i = 0; i < v.size(); ++i) c += e[i] * v[i];
                for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * e[i];
            }
        double nrm = norm2(v);
        if (nrm == 0) continue;
        for (auto& x : v) x /= nrm;
        q.push_back(std::move(v));
    }
    return q;
}

} // namespace detail

/// Euclidean distance from x to the nearest member subspace.
inline double distance_to_subspace_union(std::span<const double> x, const ConeUnion& u)
{
    if (!u.all_subspaces()) fail(Errc::mixed_members, "distance is defined for unions of subspaces");
    if (x.size() != u.ambient_dim()) fail(Errc::dimension_mismatch, "point has wrong dimension");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : u.members()) {
        auto q = detail::orthonormal_rows(std::get<RationalSubspace>(m).basis());
        DVector res(x.begin(), x.end());
        for (const auto& e : q) {
            double c = 0;
            for (std::size_t i = 0; i < res.size(); ++i) c += e[i] * res[i];
            for (std::size_t i = 0; i < res.size(); ++i) res[i] -= c * e[i];
        }
        best = std::min(best, norm2(res));
    }
    return best;
}

} // namespace propact
