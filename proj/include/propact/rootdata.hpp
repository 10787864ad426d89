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

// Restricted root data of the classical families and their Weyl groups.
//
// Type A_r lives in the trace-zero hyperplane of Z^{r+1}; every other family
// lives in Z^r. All Weyl groups in scope are groups of signed permutations,
// which gives a compact element type and a cheap unranking for lazy scans.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <string>
#include <unordered_set>
#include <vector>

#include "propact/linalg.hpp"

namespace propact {

enum class Family { A, B, C, D, BC };

inline std::string to_string(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    }
    return "?";
}

inline Family parse_family(const std::string& s)
{
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "BC") return Family::BC;
    fail(Errc::unsupported_family, "unknown root system family \"" + s + "\"");
}

/// Signed permutation acting by (w v)_i = sign_i * v_{perm_i}.
class WeylElement {
public:
    WeylElement() = default;
    explicit WeylElement(std::size_t dim) : perm_(dim), signs_(dim, 1)
    {
        for (std::size_t i = 0; i < dim; ++i) perm_[i] = static_cast<std::uint8_t>(i);
    }
    WeylElement(std::vector<std::uint8_t> perm, std::vector<std::int8_t> signs)
        : perm_(std::move(perm)), signs_(std::move(signs))
    {}

    std::size_t dim() const { return perm_.size(); }
    const std::vector<std::uint8_t>& perm() const { return perm_; }
    const std::vector<std::int8_t>& signs() const { return signs_; }

    template <class T>
    std::vector<T> apply(std::span<const T> v) const
    {
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < perm_.size(); ++i)
            out[i] = signs_[i] < 0 ? T(-v[perm_[i]]) : v[perm_[i]];
        return out;
    }
    template <class T>
    std::vector<T> apply(const std::vector<T>& v) const
    {
        return apply(std::span<const T>(v));
    }

    /// (*this) * other, i.e. apply `other` first.
    WeylElement operator*(const WeylElement& other) const
    {
        WeylElement r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            r.perm_[i] = other.perm_[perm_[i]];
            r.signs_[i] = static_cast<std::int8_t>(signs_[i] * other.signs_[perm_[i]]);
        }
        return r;
    }

    WeylElement inverse() const
    {
        WeylElement r(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            r.perm_[perm_[i]] = static_cast<std::uint8_t>(i);
            r.signs_[perm_[i]] = signs_[i];
        }
        return r;
    }

    ZMatrix matrix() const
    {
        ZMatrix m(dim(), ZVector(dim(), 0));
        for (std::size_t i = 0; i < dim(); ++i) m[i][perm_[i]] = signs_[i];
        return m;
    }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < dim(); ++i)
            if (perm_[i] != i || signs_[i] != 1) return false;
        return true;
    }

    friend bool operator==(const WeylElement&, const WeylElement&) = default;

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < dim(); ++i) {
            h = (h ^ perm_[i]) * 1099511628211ull;
            h = (h ^ static_cast<std::uint8_t>(signs_[i])) * 1099511628211ull;
        }
        return h;
    }

private:
    std::vector<std::uint8_t> perm_;
    std::vector<std::int8_t> signs_;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

struct RootDatum {
    Family family = Family::A;
    int rank = 0;
    std::size_t ambient_dim = 0;
    std::vector<ZVector> roots;
    std::vector<ZVector> positive_roots;
    std::vector<ZVector> simple_roots;
    std::vector<WeylElement> simple_reflections;

    /// Known order of W; saturates at UINT64_MAX.
    std::uint64_t weyl_order() const
    {
        auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
            std::uint64_t r;
            return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<std::uint64_t>::max() : r;
        };
        std::uint64_t order = 1;
        for (std::size_t k = 2; k <= ambient_dim; ++k) order = sat_mul(order, k);
        if (family == Family::A) return order;
        std::uint64_t signs = family == Family::D ? ambient_dim - 1 : ambient_dim;
        for (std::uint64_t k = 0; k < signs; ++k) order = sat_mul(order, 2);
        return order;
    }

    /// Linear equations cutting a out of the ambient space (empty unless type A).
    QMatrix a_equations() const
    {
        if (family != Family::A) return {};
        return {QVector(ambient_dim, Rational(1))};
    }

    bool contains_in_a(std::span<const Rational> v) const
    {
        if (v.size() != ambient_dim) return false;
        for (const auto& eq : a_equations())
            if (sgn(dot(eq, v)) != 0) return false;
        return true;
    }

    /// Element number `index` of W in a fixed order: permutations in
    /// lexicographic order (outer), sign patterns in binary order (inner).
    WeylElement weyl_element(std::uint64_t index) const
    {
        const std::size_t n = ambient_dim;
        std::uint64_t sign_count = 1;
        if (family != Family::A) sign_count = std::uint64_t{1} << (family == Family::D ? n - 1 : n);
        std::uint64_t perm_index = index / sign_count;
        std::uint64_t sign_index = index % sign_count;

        std::vector<std::uint8_t> pool(n), perm(n);
        for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i);
        std::vector<std::uint64_t> fact(n + 1, 1);
        for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t f = fact[n - 1 - i];
            std::size_t pick = static_cast<std::size_t>(perm_index / f);
            perm_index %= f;
            perm[i] = pool[pick];
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        std::vector<std::int8_t> signs(n, 1);
        if (family != Family::A) {
            std::size_t free_bits = family == Family::D ? n - 1 : n;
            int parity = 0;
            for (std::size_t i = 0; i < free_bits; ++i)
                if ((sign_index >> (free_bits - 1 - i)) & 1u) {
                    signs[i] = -1;
                    parity ^= 1;
                }
            if (family == Family::D && parity) signs[n - 1] = -1;
        }
        return {std::move(perm), std::move(signs)};
    }
};

/// Lazy view over W; elements are produced on demand by unranking, so
/// independent consumers (or threads) can walk disjoint index ranges.
class WeylRange {
public:
    explicit WeylRange(const RootDatum& d) : datum_(&d), size_(d.weyl_order()) {}

    std::uint64_t size() const { return size_; }
    WeylElement operator[](std::uint64_t i) const { return datum_->weyl_element(i); }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = WeylElement;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        iterator(const RootDatum* d, std::uint64_t i) : d_(d), i_(i) {}
        WeylElement operator*() const { return d_->weyl_element(i_); }
        iterator& operator++()
        {
            ++i_;
            return *this;
        }
        iterator operator++(int)
        {
            auto t = *this;
            ++i_;
            return t;
        }
        bool operator==(const iterator& o) const { return i_ == o.i_; }

    private:
        const RootDatum* d_ = nullptr;
        std::uint64_t i_ = 0;
    };

    iterator begin() const { return {datum_, 0}; }
    iterator end() const { return {datum_, size_}; }

private:
    const RootDatum* datum_;
    std::uint64_t size_;
};

/// Calls f(index, w) for W elements with index in [begin, end), in index
/// order, stopping early when f returns false. Cheaper than repeated
/// unranking: permutations advance with std::next_permutation.
template <class F>
void for_each_weyl_in_range(const RootDatum& d, std::uint64_t begin, std::uint64_t end, F&& f)
{
    if (begin >= end) return;
    const std::size_t n = d.ambient_dim;
    std::uint64_t sign_count = 1;
    std::size_t free_bits = 0;
    if (d.family != Family::A) {
        free_bits = d.family == Family::D ? n - 1 : n;
        sign_count = std::uint64_t{1} << free_bits;
    }
    WeylElement first = d.weyl_element(begin);
    std::vector<std::uint8_t> perm = first.perm();
    std::uint64_t sign_index = begin % sign_count;
    std::vector<std::int8_t> signs(n, 1);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::fill(signs.begin(), signs.end(), std::int8_t{1});
        int parity = 0;
        for (std::size_t i = 0; i < free_bits; ++i)
            if ((sign_index >> (free_bits - 1 - i)) & 1u) {
                signs[i] = -1;
                parity ^= 1;
            }
        if (d.family == Family::D && parity) signs[n - 1] = -1;
        if (!f(idx, WeylElement(perm, signs))) return;
        if (++sign_index == sign_count) {
            sign_index = 0;
            std::next_permutation(perm.begin(), perm.end());
        }
    }
}

namespace detail {

inline ZVector unit(std::size_t n, std::size_t i, std::int64_t c = 1)
{
    ZVector v(n, 0);
    v[i] = c;
    return v;
}

inline ZVector combo(std::size_t n, std::size_t i, std::int64_t a, std::size_t j, std::int64_t b)
{
    ZVector v(n, 0);
    v[i] += a;
    v[j] += b;
    return v;
}

inline ZVector negate(ZVector v)
{
    for (auto& x : v) x = -x;
    return v;
}

inline WeylElement swap_reflection(std::size_t n, std::size_t i)
{
    WeylElement w(n);
    auto perm = w.perm();
    std::swap(perm[i], perm[i + 1]);
    return {perm, w.signs()};
}

} // namespace detail

/// Builds Sigma, Sigma^+, simple roots and simple reflections.
inline RootDatum build_root_datum(Family family, int rank)
{
    if (rank < 1) fail(Errc::unsupported_family, "rank must be at least 1");
    if (family == Family::D && rank < 2) fail(Errc::unsupported_family, "type D requires rank >= 2");
    if (rank > 64) fail(Errc::unsupported_family, "rank above 64 is not supported");

    RootDatum d;
    d.family = family;
    d.rank = rank;
    const std::size_t n = family == Family::A ? static_cast<std::size_t>(rank) + 1 : static_cast<std::size_t>(rank);
    d.ambient_dim = n;
    using detail::combo;
    using detail::unit;

    // positive roots: e_i - e_j, then (non-A) e_i + e_j, then short/long roots
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) d.positive_roots.push_back(combo(n, i, 1, j, -1));
    if (family != Family::A) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) d.positive_roots.push_back(combo(n, i, 1, j, 1));
        for (std::size_t i = 0; i < n; ++i) {
            if (family == Family::B || family == Family::BC) d.positive_roots.push_back(unit(n, i, 1));
            if (family == Family::C || family == Family::BC) d.positive_roots.push_back(unit(n, i, 2));
        }
    }
    for (const auto& r : d.positive_roots) d.roots.push_back(r);
    for (const auto& r : d.positive_roots) d.roots.push_back(detail::negate(r));

    const std::size_t chain = family == Family::A ? n - 1 : n - 1;
    for (std::size_t i = 0; i < chain; ++i) {
        d.simple_roots.push_back(combo(n, i, 1, i + 1, -1));
        d.simple_reflections.push_back(detail::swap_reflection(n, i));
    }
    switch (family) {
    case Family::A: break;
    case Family::B:
    case Family::BC:
    case Family::C: {
        d.simple_roots.push_back(unit(n, n - 1, family == Family::C ? 2 : 1));
        WeylElement w(n);
        auto signs = w.signs();
        signs[n - 1] = -1;
        d.simple_reflections.emplace_back(w.perm(), signs);
        break;
    }
    case Family::D: {
        d.simple_roots.push_back(combo(n, n - 2, 1, n - 1, 1));
        WeylElement w(n);
        auto perm = w.perm();
        auto signs = w.signs();
        std::swap(perm[n - 2], perm[n - 1]);
        signs[n - 2] = signs[n - 1] = -1;
        d.simple_reflections.emplace_back(perm, signs);
        break;
    }
    }
    return d;
}

/// Materialized W by breadth-first closure under the simple reflections.
inline std::vector<WeylElement> weyl_elements(const RootDatum& d, std::uint64_t cap)
{
    const std::uint64_t order = d.weyl_order();
    if (order > cap)
        fail(Errc::cap_exceeded, "|W| = " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
    if (d.rank > 8) fail(Errc::cap_exceeded, "materialization is limited to rank <= 8; use WeylRange");

    std::vector<WeylElement> out{WeylElement(d.ambient_dim)};
    std::unordered_set<WeylElement, WeylElementHash> seen(out.begin(), out.end());
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& s : d.simple_reflections) {
            WeylElement next = s * out[head];
            if (seen.insert(next).second) {
                if (out.size() >= cap)
                    fail(Errc::cap_exceeded, "closure exceeded cap " + std::to_string(cap));
                out.push_back(std::move(next));
            }
        }
    }
    return out;
}

struct DominantResult {
    QVector vector;
    WeylElement witness; // witness.apply(input) == vector
};

/// Closed dominant chamber representative of the W-orbit of v.
inline DominantResult dominant_with_witness(const RootDatum& d, std::span<const Rational> v)
{
    const std::size_t n = d.ambient_dim;
    if (v.size() != n) fail(Errc::dimension_mismatch, "vector length does not match the ambient dimension");
    std::vector<std::int8_t> flip(n, 1);
    QVector key(v.begin(), v.end());
    if (d.family != Family::A)
        for (std::size_t i = 0; i < n; ++i)
            if (sgn(key[i]) < 0) {
                key[i] = -key[i];
                flip[i] = -1;
            }
    std::vector<std::uint8_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint8_t>(i);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return key[a] > key[b]; });

    std::vector<std::int8_t> signs(n);
    for (std::size_t i = 0; i < n; ++i) signs[i] = flip[order[i]];
    if (d.family == Family::D) {
        int negatives = 0;
        for (auto s : signs) negatives += s < 0;
        if (negatives % 2 == 1) {
            // parity fix on the smallest |coordinate|; it is zero or becomes negative
            signs[n - 1] = static_cast<std::int8_t>(-signs[n - 1]);
        }
    }
    WeylElement w(order, signs);
    return {w.apply(v), w};
}

inline QVector dominant_representative(const RootDatum& d, std::span<const Rational> v)
{
    return dominant_with_witness(d, v).vector;
}

inline Rational root_pairing(std::span<const std::int64_t> root, std::span<const Rational> y)
{
    Rational s = 0;
    for (std::size_t i = 0; i < root.size(); ++i)
        if (root[i] != 0) s += y[i] * root[i];
    return s;
}

/// rho_h(Y) = sum over positive roots of |alpha(Y)|.
inline Rational rho_h(const RootDatum& d, std::span<const Rational> y)
{
    if (y.size() != d.ambient_dim) fail(Errc::dimension_mismatch, "vector length does not match the ambient dimension");
    Rational s = 0;
    for (const auto& a : d.positive_roots) s += abs(root_pairing(a, y));
    return s;
}

} // namespace propact
