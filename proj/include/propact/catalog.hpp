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

// Pseudo-Riemannian space forms X(p,q): arithmetic predicates and the
// Radon-Hurwitz table audit.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propact/cartan.hpp"

namespace propact {

enum class Curvature { positive, negative };

inline Curvature parse_curvature(const std::string& s)
{
    if (s == "positive" || s == "+") return Curvature::positive;
    if (s == "negative" || s == "-") return Curvature::negative;
    fail(Errc::parse_error, "curvature must be 'positive' or 'negative'");
}

inline std::string to_string(Curvature c) { return c == Curvature::positive ? "positive" : "negative"; }

inline void check_signature(int p, int q)
{
    if (p < 0 || q < 0 || p + q < 1) fail(Errc::invalid_argument, "need p, q >= 0 and p + q >= 1");
}

/// X(p,q)_+ = O(p+1,q)/O(p,q) and X(p,q)_- = O(p,q+1)/O(p,q).
inline std::pair<MatrixGroupSpec, MatrixGroupSpec> space_form_pair(int p, int q, Curvature c)
{
    check_signature(p, q);
    auto h = MatrixGroupSpec::so(p, q);
    auto g = c == Curvature::positive ? MatrixGroupSpec::so(p + 1, q) : MatrixGroupSpec::so(p, q + 1);
    return {g, h};
}

inline bool is_even_positive(int q) { return q > 0 && q % 2 == 0; }

inline bool cm_infinite(int p, int q) { return p < q; }

inline bool surface_group_admissible(int p, int q) { return p + 1 < q || (p + 1 == q && is_even_positive(q)); }

inline bool compact_quotient_necessary(int p, int q) { return p * q == 0 || (p < q && is_even_positive(q)); }

/// Membership in the conjectured list: q = 0; p = 0; p = 1, q even;
/// p = 3, q divisible by 4; (p, q) = (7, 8).
inline bool conjecture_g4_member(int p, int q)
{
    if (p < 0 || q < 0) return false;
    if (q == 0 || p == 0) return true;
    if (p == 1) return q % 2 == 0;
    if (p == 3) return q % 4 == 0;
    return p == 7 && q == 8;
}

/// rho(2^{4a+b} * odd) = 8a + 2^b, 0 <= b <= 3.
inline int radon_hurwitz(long q)
{
    if (q < 1) fail(Errc::invalid_argument, "Radon-Hurwitz number needs q >= 1");
    int k = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++k;
    }
    return 8 * (k / 4) + (1 << (k % 4));
}

inline bool tangential_admits_compact(int p, int q)
{
    if (p < 0 || q < 0) return false;
    if (q == 0) return true; // G_theta/H_theta is compact
    return p < radon_hurwitz(q);
}

/// Printed generators of the q-column, indexed by p = 1..11 (q in gN).
inline std::optional<int> printed_tangential_generator(int p)
{
    static constexpr int row[] = {2, 2, 4, 8, 8, 8, 8, 16, 32, 64, 64};
    if (p < 1 || p > 11) return std::nullopt;
    return row[p - 1];
}

inline std::string generator_label(std::optional<int> g)
{
    if (!g) return "none";
    return *g == 1 ? "N" : std::to_string(*g) + "N";
}

struct AuditRow {
    int p = 0;
    std::string computed;
    std::string printed;
    bool match = false;
};

inline constexpr int kTangentialQMax = 128;

/// For each p, the set {1 <= q <= 128 : p < rho(q)} written as gN when it
/// is exactly the multiples of g, compared with the printed row.
inline std::vector<AuditRow> tangential_table_audit(int p_max)
{
    if (p_max < 1) fail(Errc::invalid_argument, "p_max must be >= 1");
    std::vector<AuditRow> rows;
    for (int p = 1; p <= p_max; ++p) {
        std::vector<int> qs;
        for (int q = 1; q <= kTangentialQMax; ++q)
            if (tangential_admits_compact(p, q)) qs.push_back(q);
        AuditRow row;
        row.p = p;
        if (qs.empty()) {
            row.computed = "none<=" + std::to_string(kTangentialQMax);
        } else {
            int g = qs.front();
            bool multiples = static_cast<int>(qs.size()) == kTangentialQMax / g;
            for (std::size_t i = 0; multiples && i < qs.size(); ++i) multiples = qs[i] == g * static_cast<int>(i + 1);
            if (multiples) {
                row.computed = generator_label(g);
            } else {
                for (int q : qs) row.computed += (row.computed.empty() ? "" : ",") + std::to_string(q);
            }
        }
        auto printed = printed_tangential_generator(p);
        row.printed = printed ? generator_label(printed) : "absent";
        row.match = printed.has_value() && row.computed == row.printed;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace propact
