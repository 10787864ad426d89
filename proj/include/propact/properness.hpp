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

// Properness of L acting on G/H for reductive L, H with split parts a_L,
// a_H inside a: the action is proper iff a_H meets every Weyl translate of
// a_L only at the origin. Negative verdicts carry an exact witness.

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "propact/cartan.hpp"
#include "propact/cones.hpp"

namespace propact {

inline constexpr std::uint64_t kDefaultWeylCap = 10'000'000;

/// The split Cartan subspace a itself (trace-zero hyperplane for type A).
inline RationalSubspace a_subspace(const RootDatum& d)
{
    auto eqs = d.a_equations();
    if (eqs.empty()) return RationalSubspace::whole(d.ambient_dim);
    return RationalSubspace::span(nullspace(eqs, d.ambient_dim), d.ambient_dim);
}

struct ReductivePair {
    RootDatum datum;
    RationalSubspace a_L;
    RationalSubspace a_H;

    void validate() const
    {
        auto a = a_subspace(datum);
        for (const auto* s : {&a_L, &a_H}) {
            if (s->ambient_dim() != datum.ambient_dim)
                fail(Errc::dimension_mismatch, "subspace ambient differs from the root datum");
            if (!a.contains(*s)) fail(Errc::invalid_argument, "subspace is not contained in a");
        }
    }
};

enum class VerdictMethod { weyl_exhaustive, closed_form };

inline std::string to_string(VerdictMethod m)
{
    return m == VerdictMethod::weyl_exhaustive ? "weyl_exhaustive" : "closed_form";
}

struct PropernessWitness {
    std::uint64_t weyl_index = 0;
    WeylElement weyl;   // x lies in a_H and in weyl * a_L
    ZVector vector;     // primitive integer representative of x
};

struct PropernessVerdict {
    bool proper = true;
    std::optional<PropernessWitness> witness;
    VerdictMethod method = VerdictMethod::weyl_exhaustive;
};

/// Exact re-check: x in a_H and w^{-1} x in a_L, x != 0.
inline bool verify_witness(const ReductivePair& pair, const PropernessVerdict& v)
{
    if (v.proper != !v.witness.has_value()) return false;
    if (v.proper) return true;
    QVector x = to_q(v.witness->vector);
    if (propact::is_zero(std::span<const Rational>(x))) return false;
    return pair.a_H.contains(x) && pair.a_L.contains(v.witness->weyl.inverse().apply(x));
}

struct ScanOptions {
    unsigned threads = 1;
    std::uint64_t cap = kDefaultWeylCap;
};

/// Exhaustive scan of W. The first witness in enumeration order is
/// reported, whatever the thread count.
inline PropernessVerdict is_proper_reductive(const ReductivePair& pair, const ScanOptions& opt = {})
{
    pair.validate();
    PropernessVerdict verdict;
    if (pair.a_L.is_zero() || pair.a_H.is_zero()) return verdict;
    const std::uint64_t order = pair.datum.weyl_order();
    if (order > opt.cap)
        fail(Errc::cap_exceeded, "|W| = " + std::to_string(order) + " exceeds cap " + std::to_string(opt.cap));

    // a_H cap w a_L != 0  iff  ann(a_H) * (w B_L) has rank < dim a_L
    const ZMatrix ann = to_integer_rows(pair.a_H.annihilator());
    const ZMatrix basis_L = to_integer_rows(pair.a_L.basis());
    const std::size_t dim_L = basis_L.size();

    const std::size_t chunks = default_chunks(order, opt.threads);
    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> first_hit(chunks, none);
    parallel_chunks(order, chunks, opt.threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        ZMatrix m(ann.size(), ZVector(dim_L));
        for_each_weyl_in_range(pair.datum, begin, end, [&](std::uint64_t idx, const WeylElement& w) {
            bool all_zero = true;
            for (std::size_t j = 0; j < dim_L; ++j) {
                ZVector moved = w.apply(basis_L[j]);
                for (std::size_t i = 0; i < ann.size(); ++i) {
                    __int128 s = 0;
                    for (std::size_t k = 0; k < moved.size(); ++k) s += static_cast<__int128>(ann[i][k]) * moved[k];
                    if (s > std::numeric_limits<std::int64_t>::max() || s < std::numeric_limits<std::int64_t>::min())
                        fail(Errc::cap_exceeded, "integer overflow in Weyl scan");
                    m[i][j] = static_cast<std::int64_t>(s);
                    all_zero = all_zero && s == 0;
                }
            }
            bool hit = dim_L == 1 ? all_zero : integer_rank(m, dim_L) < dim_L;
            if (hit) {
                first_hit[chunk] = idx;
                return false;
            }
            return true;
        });
    });
    std::uint64_t best = none;
    for (auto h : first_hit) best = std::min(best, h);
    if (best == none) return verdict;

    WeylElement w = pair.datum.weyl_element(best);
    auto meet = subspace_intersection(pair.a_H, pair.a_L.transformed(w));
    verdict.proper = false;
    verdict.witness = PropernessWitness{best, w, primitive(meet.basis().front())};
    return verdict;
}

/// Distinct subspaces w * s, w in W.
inline ConeUnion weyl_orbit_union(const RootDatum& d, const RationalSubspace& s, std::uint64_t cap = kDefaultWeylCap)
{
    const std::uint64_t order = d.weyl_order();
    if (order > cap)
        fail(Errc::cap_exceeded, "|W| = " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
    std::vector<ConeMember> members;
    std::unordered_set<std::string> seen;
    for_each_weyl_in_range(d, 0, order, [&](std::uint64_t, const WeylElement& w) {
        auto moved = s.transformed(w);
        std::string key;
        for (const auto& row : moved.basis())
            for (const auto& x : row) key += to_string(x) + ",";
        if (seen.insert(key).second) members.emplace_back(std::move(moved));
        return true;
    });
    return ConeUnion(std::move(members));
}

/// W a_L and W a_H coincide as sets.
inline bool is_similar_reductive(const ReductivePair& pair, std::uint64_t cap = kDefaultWeylCap)
{
    pair.validate();
    return similar_subspace_unions(weyl_orbit_union(pair.datum, pair.a_L, cap),
                                   weyl_orbit_union(pair.datum, pair.a_H, cap));
}

// --- Calabi-Markus and cocompactness ---------------------------------------

/// Optional split data for the second route: a_H inside the datum of G.
struct SplitData {
    std::optional<RootDatum> datum; // nullopt when G is compact (a = 0)
    RationalSubspace a_H;
};

struct CalabiMarkusResult {
    bool infinite_discontinuous = false;
    int rank_G = 0;
    int rank_H = 0;
    std::optional<bool> similarity_route; // !(a_H ~ a), when split data was given
};

/// rank_R G > rank_R H, optionally cross-checked against the similarity
/// test on the split data (a mismatch throws InconsistentCriteria).
inline CalabiMarkusResult calabi_markus(const MatrixGroupSpec& g, const MatrixGroupSpec& h,
                                        const std::optional<SplitData>& split = std::nullopt,
                                        std::uint64_t cap = kDefaultWeylCap)
{
    CalabiMarkusResult r;
    r.rank_G = real_rank(g);
    r.rank_H = real_rank(h);
    r.infinite_discontinuous = r.rank_G > r.rank_H;
    if (split) {
        bool similar;
        if (!split->datum) {
            similar = split->a_H.is_zero();
        } else {
            ReductivePair pair{*split->datum, a_subspace(*split->datum), split->a_H};
            similar = is_similar_reductive(pair, cap);
        }
        r.similarity_route = !similar;
        if (*r.similarity_route != r.infinite_discontinuous)
            fail(Errc::inconsistent_criteria, "rank test and similarity test disagree for " + describe(g) +
                                                  " / " + describe(h));
    }
    return r;
}

/// d(L) + d(H) = d(G).
inline bool cocompact_standard_check(long d_G, long d_H, long d_L) { return d_L + d_H == d_G; }

/// Restricted root datum of o(p,q): B_r for p != q, D_r for p = q >= 2,
/// r = min(p,q). o(1,1) uses B_1, whose Weyl group {+-1} matches O(1,1).
inline std::optional<RootDatum> orthogonal_restricted_datum(int p, int q)
{
    int r = std::min(p, q);
    if (r <= 0) return std::nullopt;
    if (p == q && r >= 2) return build_root_datum(Family::D, r);
    return build_root_datum(Family::B, r);
}

/// Span of the first k coordinate vectors of a non-A datum.
inline RationalSubspace coordinate_subspace(std::size_t ambient_dim, std::size_t k)
{
    QMatrix gens;
    for (std::size_t i = 0; i < k; ++i) {
        QVector v(ambient_dim, Rational(0));
        v[i] = 1;
        gens.push_back(std::move(v));
    }
    return RationalSubspace::span(gens, ambient_dim);
}

// --- SL(2,R) -> SL(n,R) partition machinery --------------------------------

/// A partition of n by multiplicities: mult[j-1] copies of the part j.
class Partition {
public:
    Partition() = default;

    static Partition from_multiplicities(std::vector<int> mult)
    {
        Partition p;
        p.mult_ = std::move(mult);
        for (int m : p.mult_)
            if (m < 0) fail(Errc::invalid_argument, "negative multiplicity");
        while (!p.mult_.empty() && p.mult_.back() == 0) p.mult_.pop_back();
        return p;
    }

    static Partition from_parts(const std::vector<int>& parts)
    {
        std::vector<int> mult;
        for (int part : parts) {
            if (part < 1) fail(Errc::invalid_argument, "partition parts must be positive");
            if (static_cast<std::size_t>(part) > mult.size()) mult.resize(static_cast<std::size_t>(part), 0);
            ++mult[static_cast<std::size_t>(part - 1)];
        }
        return from_multiplicities(std::move(mult));
    }

    int n() const
    {
        int s = 0;
        for (std::size_t j = 0; j < mult_.size(); ++j) s += static_cast<int>(j + 1) * mult_[j];
        return s;
    }

    /// Multiplicity of the part j (j >= 1).
    int multiplicity(int j) const
    {
        return j >= 1 && static_cast<std::size_t>(j) <= mult_.size() ? mult_[static_cast<std::size_t>(j - 1)] : 0;
    }

    const std::vector<int>& multiplicities() const { return mult_; }

    /// Parts in nonincreasing order.
    std::vector<int> parts() const
    {
        std::vector<int> out;
        for (std::size_t j = mult_.size(); j-- > 0;)
            for (int c = 0; c < mult_[j]; ++c) out.push_back(static_cast<int>(j + 1));
        return out;
    }

    bool is_irreducible() const { return parts().size() == 1; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> mult_;
};

/// All partitions of n, parts listed in reverse lexicographic order.
inline std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition::from_parts(parts));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    if (n >= 1) rec(rec, n, n);
    return out;
}

/// Concatenation of m_j copies of (j-1, j-3, ..., 1-j), largest parts first.
inline ZVector sl2_ray(const Partition& p)
{
    ZVector ray;
    for (int part : p.parts())
        for (int k = 0; k < part; ++k) ray.push_back(part - 1 - 2 * k);
    return ray;
}

inline void check_sl2_arguments(const Partition& p, int m)
{
    if (p.n() < 2) fail(Errc::invalid_argument, "need n >= 2");
    if (m < 1 || m >= p.n()) fail(Errc::invalid_argument, "need 1 <= m < n");
}

/// The pair (a_L, a_H) for phi(SL(2,R)) and SL(m,R) inside SL(n,R).
inline ReductivePair sl2_pair(const Partition& p, int m)
{
    check_sl2_arguments(p, m);
    const int n = p.n();
    ReductivePair pair{build_root_datum(Family::A, n - 1), {}, {}};
    const auto dim = static_cast<std::size_t>(n);
    ZVector ray = sl2_ray(p);
    pair.a_L = std::all_of(ray.begin(), ray.end(), [](auto x) { return x == 0; })
                   ? RationalSubspace(dim)
                   : RationalSubspace::span(std::vector<ZVector>{ray}, dim);
    std::vector<ZVector> h;
    for (int i = 0; i + 1 < m; ++i) {
        ZVector v(dim, 0);
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(i + 1)] = -1;
        h.push_back(std::move(v));
    }
    pair.a_H = RationalSubspace::span(h, dim);
    return pair;
}

/// Ground truth: exhaustive scan over the symmetric group.
inline PropernessVerdict sl2_proper_oracle(const Partition& p, int m, const ScanOptions& opt = {})
{
    return is_proper_reductive(sl2_pair(p, m), opt);
}

/// A permuted ray lies in a_H iff it has at least n - m zero entries; the
/// zero ray (trivial homomorphism) is proper.
inline bool sl2_proper_zero_count(const Partition& p, int m)
{
    check_sl2_arguments(p, m);
    ZVector ray = sl2_ray(p);
    long zeros = std::count(ray.begin(), ray.end(), 0);
    if (zeros == static_cast<long>(ray.size())) return true;
    return zeros < p.n() - m;
}

/// The closed form printed for general partitions, evaluated verbatim:
/// sum over odd j of j * m_j < n - m.
inline bool sl2_proper_printed_formula(const Partition& p, int m)
{
    check_sl2_arguments(p, m);
    long s = 0;
    for (int j = 1; j <= p.n(); j += 2) s += static_cast<long>(j) * p.multiplicity(j);
    return s < p.n() - m;
}

/// The closed form for the irreducible representation: n even or n - m >= 2.
inline bool sl2_proper_irreducible(int n, int m) { return n % 2 == 0 || n - m >= 2; }

struct Sl2AuditRow {
    int n = 0;
    int m = 0;
    std::vector<int> parts;
    bool oracle = false;
    bool zero_count = false;
    bool printed = false;
    std::optional<bool> irreducible; // only for the partition (n)
};

struct Sl2AuditReport {
    std::vector<Sl2AuditRow> rows;
    std::size_t zero_count_disagreements = 0;
    std::size_t printed_disagreements = 0;
    std::size_t irreducible_cases = 0;
    std::size_t irreducible_disagreements = 0;
};

/// Tabulates every partition of n <= n_max against every 1 <= m < n. All
/// three closed forms are compared with the oracle; nothing is reconciled.
inline Sl2AuditReport sl2_formula_audit(int n_max, const ScanOptions& opt = {})
{
    Sl2AuditReport rep;
    for (int n = 2; n <= n_max; ++n)
        for (const auto& p : partitions(n))
            for (int m = 1; m < n; ++m) {
                Sl2AuditRow row;
                row.n = n;
                row.m = m;
                row.parts = p.parts();
                row.oracle = sl2_proper_oracle(p, m, opt).proper;
                row.zero_count = sl2_proper_zero_count(p, m);
                row.printed = sl2_proper_printed_formula(p, m);
                if (p.is_irreducible()) {
                    row.irreducible = sl2_proper_irreducible(n, m);
                    ++rep.irreducible_cases;
                    rep.irreducible_disagreements += *row.irreducible != row.oracle;
                }
                rep.zero_count_disagreements += row.zero_count != row.oracle;
                rep.printed_disagreements += row.printed != row.oracle;
                rep.rows.push_back(std::move(row));
            }
    return rep;
}

// --- sharpness ---------------------------------------------------------------

struct SharpnessFit {
    std::vector<std::pair<double, double>> pareto; // (c, C), c ascending
    double c_asymptotic = 0.0;
    double tail_floor = 0.0;
    std::size_t tail_count = 0;
};

/// For each c, the least C with d_i >= c * n_i - C on every sample, where
/// n_i = |x_i| and d_i = dist(x_i, mu_H). The asymptotic slope is the
/// smallest d_i / n_i over the tail (default: the larger half of the norms).
inline SharpnessFit sharpness_fit(const std::vector<DVector>& samples, const ConeUnion& mu_H,
                                  std::vector<double> c_grid, std::optional<double> tail_floor = std::nullopt)
{
    if (samples.empty()) fail(Errc::empty_samples, "no samples");
    std::vector<double> norms, dists;
    for (const auto& x : samples) {
        norms.push_back(norm2(x));
        dists.push_back(distance_to_subspace_union(x, mu_H));
    }
    SharpnessFit fit;
    if (tail_floor) {
        fit.tail_floor = *tail_floor;
    } else {
        std::vector<double> sorted = norms;
        std::sort(sorted.begin(), sorted.end());
        fit.tail_floor = sorted[sorted.size() / 2];
    }
    std::sort(c_grid.begin(), c_grid.end());
    c_grid.erase(std::unique(c_grid.begin(), c_grid.end()), c_grid.end());
    for (double c : c_grid) {
        double C = 0.0;
        for (std::size_t i = 0; i < samples.size(); ++i) C = std::max(C, c * norms[i] - dists[i]);
        fit.pareto.emplace_back(c, C);
    }
    fit.c_asymptotic = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples.size(); ++i)
        if (norms[i] >= fit.tail_floor && norms[i] > 0) {
            fit.c_asymptotic = std::min(fit.c_asymptotic, dists[i] / norms[i]);
            ++fit.tail_count;
        }
    if (fit.tail_count == 0) fail(Errc::empty_tail, "no sample reaches the tail floor");
    return fit;
}

/// Every listed (c, C) satisfies every sample constraint, evaluated with the
/// same floating-point expression that produced C.
inline bool sharpness_constraints_hold(const SharpnessFit& fit, const std::vector<DVector>& samples,
                                       const ConeUnion& mu_H)
{
    for (const auto& x : samples) {
        double n = norm2(x), d = distance_to_subspace_union(x, mu_H);
        for (auto [c, C] : fit.pareto)
            if (c * n - d > C) return false;
    }
    return true;
}

/// Asymptotic cones meet only at the origin.
inline bool is_sharp_cones(const PolyCone& gamma_inf, const ConeUnion& mu_H_inf)
{
    return pitchfork_unions(ConeUnion({gamma_inf}), mu_H_inf);
}

} // namespace propact
