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

// rho_V, rho_h and p_V = max rho_h / rho_V over a \ {0}. Both functions
// are linear on every cone of the arrangement cut out by roots and
// weights, so the maximum is attained on a one-dimensional flat.

#include <array>
#include <bitset>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "propact/parallel.hpp"
#include "propact/properness.hpp"

namespace propact {

struct Weight {
    QVector covector;
    std::int64_t mult = 1;
};

class WeightSystem {
public:
    WeightSystem() = default;

    /// Equal covectors are merged and their multiplicities added; the
    /// first occurrence fixes the order.
    WeightSystem(std::size_t ambient_dim, std::vector<Weight> weights, std::string label = {})
        : ambient_(ambient_dim), label_(std::move(label))
    {
        std::map<std::vector<std::string>, std::size_t> index;
        for (auto& w : weights) {
            if (w.covector.size() != ambient_dim) fail(Errc::dimension_mismatch, "weight covector has wrong length");
            if (w.mult < 1) fail(Errc::invalid_argument, "weight multiplicity must be >= 1");
            auto key = to_strings(w.covector);
            auto [it, fresh] = index.emplace(std::move(key), weights_.size());
            if (fresh)
                weights_.push_back(std::move(w));
            else
                weights_[it->second].mult += w.mult;
        }
    }

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const std::string& label() const { return label_; }

    std::int64_t total_multiplicity() const
    {
        std::int64_t s = 0;
        for (const auto& w : weights_) s += w.mult;
        return s;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Weight> weights_;
    std::string label_;
};

/// rho_V(Y) = 1/2 sum mult * |lambda(Y)|.
inline Rational rho_value(const WeightSystem& ws, std::span<const Rational> y)
{
    if (y.size() != ws.ambient_dim()) fail(Errc::dimension_mismatch, "vector length does not match the weights");
    Rational s = 0;
    for (const auto& w : ws.weights()) s += w.mult * abs(dot(w.covector, y));
    return s / 2;
}

/// Standard representation of the split classical group of the datum:
/// e_i for type A, +-e_i otherwise (with one zero weight for B).
inline WeightSystem weights_standard(const RootDatum& d)
{
    const std::size_t n = d.ambient_dim;
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < n; ++i) {
        QVector e(n, Rational(0));
        e[i] = 1;
        ws.push_back({e, 1});
        if (d.family != Family::A) {
            e[i] = -1;
            ws.push_back({e, 1});
        }
    }
    if (d.family == Family::B) ws.push_back({QVector(n, Rational(0)), 1});
    return WeightSystem(n, std::move(ws), "standard " + to_string(d.family) + std::to_string(d.rank));
}

/// Roots together with `rank` zero weights.
inline WeightSystem weights_adjoint(const RootDatum& d)
{
    std::vector<Weight> ws;
    for (const auto& r : d.roots) ws.push_back({to_q(r), 1});
    ws.push_back({QVector(d.ambient_dim, Rational(0)), d.rank});
    return WeightSystem(d.ambient_dim, std::move(ws), "adjoint " + to_string(d.family) + std::to_string(d.rank));
}

inline WeightSystem weights_direct_sum(const std::vector<WeightSystem>& parts)
{
    if (parts.empty()) fail(Errc::invalid_argument, "empty direct sum");
    std::vector<Weight> ws;
    std::string label;
    for (const auto& p : parts) {
        if (p.ambient_dim() != parts.front().ambient_dim())
            fail(Errc::dimension_mismatch, "direct summands live on different ambient spaces");
        ws.insert(ws.end(), p.weights().begin(), p.weights().end());
        label += (label.empty() ? "" : " + ") + p.label();
    }
    return WeightSystem(parts.front().ambient_dim(), std::move(ws), label);
}

/// The image of ws under w, lambda -> lambda o w^{-1}.
inline WeightSystem transformed(const WeightSystem& ws, const WeylElement& w)
{
    std::vector<Weight> out;
    for (const auto& wt : ws.weights()) out.push_back({w.apply(wt.covector), wt.mult});
    return WeightSystem(ws.ambient_dim(), std::move(out), ws.label());
}

struct PvResult {
    bool infinite = false;
    Rational value;       // meaningful when !infinite
    ZVector argmax_ray;
    std::uint64_t chamber_count = 0;
    std::uint64_t ray_count = 0;
};

inline std::string pv_string(const PvResult& r) { return r.infinite ? "inf" : to_string(r.value); }

struct PvOptions {
    unsigned threads = 1;
    std::uint64_t cap = 1'000'000; // flats of the arrangement
    bool allow_infinite = false;
};

namespace detail {

inline constexpr std::size_t kMaxHyperplanes = 256;
using HyperMask = std::bitset<kMaxHyperplanes>;

struct HyperMaskHash {
    std::size_t operator()(const HyperMask& m) const { return std::hash<HyperMask>{}(m); }
};

struct Flat {
    HyperMask mask;        // hyperplanes containing the flat
    std::vector<ZVector> basis;
};

inline std::int64_t checked_dot(const ZVector& a, const ZVector& b)
{
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
        fail(Errc::cap_exceeded, "integer overflow in arrangement enumeration");
    return static_cast<std::int64_t>(s);
}

inline HyperMask containing_mask(const std::vector<ZVector>& basis, const std::vector<ZVector>& normals)
{
    HyperMask m;
    for (std::size_t h = 0; h < normals.size(); ++h) {
        bool all = true;
        for (const auto& b : basis)
            if (checked_dot(normals[h], b) != 0) {
                all = false;
                break;
            }
        if (all) m.set(h);
    }
    return m;
}

/// Basis of flat cap {normal = 0}.
inline std::vector<ZVector> cut(const std::vector<ZVector>& basis, const ZVector& normal)
{
    std::vector<std::int64_t> s(basis.size());
    std::size_t pivot = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        s[i] = checked_dot(normal, basis[i]);
        if (s[i] != 0 && pivot == basis.size()) pivot = i;
    }
    std::vector<ZVector> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (i == pivot) continue;
        QVector v(basis[i].size());
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = Rational(s[pivot]) * basis[i][k] - Rational(s[i]) * basis[pivot][k];
        out.push_back(primitive(v));
    }
    return out;
}

/// Sign-normalized representative: the lexicographically larger of +-v.
inline ZVector lex_max_sign(ZVector v)
{
    ZVector neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    return std::max(v, neg);
}

} // namespace detail

/// Exact p_V over a. Flats of the arrangement are built level by level;
/// the one-dimensional flats are the candidate rays and the Moebius
/// function of the flat poset gives the number of chambers.
inline PvResult p_V(const WeightSystem& ws, const RootDatum& d, const PvOptions& opt = {})
{
    using detail::Flat;
    using detail::HyperMask;
    if (ws.ambient_dim() != d.ambient_dim) fail(Errc::dimension_mismatch, "weights and datum differ in dimension");
    const std::size_t n = d.ambient_dim;

    std::vector<ZVector> normals;
    {
        std::map<ZVector, int> seen;
        auto add = [&](const QVector& c) {
            if (propact::is_zero(std::span<const Rational>(c))) return;
            ZVector v = detail::lex_max_sign(primitive(c));
            if (seen.emplace(v, 0).second) normals.push_back(std::move(v));
        };
        for (const auto& r : d.positive_roots) add(to_q(r));
        for (const auto& w : ws.weights()) add(w.covector);
    }
    if (normals.size() > detail::kMaxHyperplanes) fail(Errc::cap_exceeded, "too many hyperplanes");

    // the base flat: a, restricted to the complement of the lineality space
    QMatrix eqs = d.a_equations();
    auto a_basis = nullspace(eqs, n);
    if (a_basis.empty()) fail(Errc::degenerate_ambient, "a = 0");
    {
        QMatrix all = eqs;
        for (const auto& h : normals) all.push_back(to_q(h));
        auto lineality = nullspace(all, n);
        if (!lineality.empty()) {
            for (auto& l : lineality) eqs.push_back(std::move(l));
            a_basis = nullspace(eqs, n);
            if (a_basis.empty()) fail(Errc::degenerate_ambient, "arrangement has no essential part");
        }
    }
    const std::size_t r = a_basis.size();

    std::vector<std::vector<Flat>> levels(1);
    {
        Flat base;
        for (const auto& b : a_basis) base.basis.push_back(primitive(b));
        base.mask = detail::containing_mask(base.basis, normals);
        levels[0].push_back(std::move(base));
    }
    std::uint64_t total = 1;
    for (std::size_t k = 1; k < r; ++k) {
        const auto& prev = levels[k - 1];
        const std::size_t chunks = default_chunks(prev.size(), opt.threads);
        std::vector<std::vector<Flat>> found(chunks);
        parallel_chunks(prev.size(), chunks, opt.threads, [&](std::size_t c, std::size_t b, std::size_t e) {
            std::unordered_map<HyperMask, int, detail::HyperMaskHash> local;
            for (std::size_t i = b; i < e; ++i)
                for (std::size_t h = 0; h < normals.size(); ++h) {
                    if (prev[i].mask.test(h)) continue;
                    Flat f;
                    f.basis = detail::cut(prev[i].basis, normals[h]);
                    f.mask = detail::containing_mask(f.basis, normals);
                    if (local.emplace(f.mask, 0).second) found[c].push_back(std::move(f));
                }
        });
        std::unordered_map<HyperMask, int, detail::HyperMaskHash> seen;
        std::vector<Flat> level;
        for (auto& part : found)
            for (auto& f : part)
                if (seen.emplace(f.mask, 0).second) {
                    level.push_back(std::move(f));
                    if (++total > opt.cap)
                        fail(Errc::cap_exceeded, "arrangement has more than " + std::to_string(opt.cap) + " flats");
                }
        levels.push_back(std::move(level));
    }

    // chambers = sum over flats of |mu(base, flat)|
    {
        std::vector<const Flat*> order;
        std::vector<std::int64_t> mu;
        std::uint64_t chambers = 0;
        for (const auto& level : levels)
            for (const auto& f : level) {
                std::int64_t m = order.empty() ? 1 : 0;
                for (std::size_t j = 0; j < order.size(); ++j)
                    if ((order[j]->mask & ~f.mask).none()) m -= mu[j];
                order.push_back(&f);
                mu.push_back(m);
                chambers += static_cast<std::uint64_t>(m < 0 ? -m : m);
            }
        // the zero flat (rank r) sits below all rays
        std::int64_t m0 = 0;
        for (auto x : mu) m0 -= x;
        chambers += static_cast<std::uint64_t>(m0 < 0 ? -m0 : m0);
        PvResult res;
        res.chamber_count = chambers;
        res.ray_count = levels.back().size();

        bool have = false;
        ZVector best_ray;
        for (const auto& f : levels.back()) {
            ZVector ray = detail::lex_max_sign(f.basis.front());
            QVector y = to_q(ray);
            Rational h = rho_h(d, y), v = rho_value(ws, y);
            if (sgn(v) == 0) {
                if (sgn(h) == 0) continue;
                if (!opt.allow_infinite)
                    fail(Errc::non_compact_kernel, "rho_V vanishes on a direction where rho_h does not");
                if (!res.infinite || ray > best_ray) best_ray = ray;
                res.infinite = true;
                have = true;
                continue;
            }
            if (res.infinite) continue;
            Rational q = h / v;
            if (!have || q > res.value || (q == res.value && ray > best_ray)) {
                res.value = q;
                best_ray = ray;
                have = true;
            }
        }
        if (!have) fail(Errc::degenerate_ambient, "no direction with rho_V > 0");
        res.argmax_ray = best_ray;
        return res;
    }
}

enum class TemperConvention { derived_chh, printed };
enum class Temperedness { tempered, boundary, not_tempered };

inline std::string to_string(TemperConvention c) { return c == TemperConvention::printed ? "printed" : "derived_chh"; }

inline std::string to_string(Temperedness t)
{
    switch (t) {
    case Temperedness::tempered: return "tempered";
    case Temperedness::boundary: return "boundary";
    default: return "not_tempered";
    }
}

/// derived_chh: tempered iff p_V <= 2. printed: tempered iff p_V >= 2.
/// p_V = 2 is reported as boundary under both.
inline Temperedness temperedness_verdict(const PvResult& pv, TemperConvention c = TemperConvention::derived_chh)
{
    const bool printed = c == TemperConvention::printed;
    if (pv.infinite) return printed ? Temperedness::tempered : Temperedness::not_tempered;
    int cmp_two = cmp(pv.value, 2);
    if (cmp_two == 0) return Temperedness::boundary;
    bool below = cmp_two < 0;
    return below != printed ? Temperedness::tempered : Temperedness::not_tempered;
}

} // namespace propact
