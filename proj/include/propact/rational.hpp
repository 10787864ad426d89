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

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "propact/errors.hpp"

namespace propact {

using Rational = mpq_class;
using QVector = std::vector<Rational>;
using ZVector = std::vector<std::int64_t>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    if (den == 0) fail(Errc::invalid_argument, "zero denominator");
    Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    r.canonicalize();
    return r;
}

/// "p" for integers, "p/q" otherwise; always canonical.
inline std::string to_string(const Rational& r)
{
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& text)
{
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        fail(Errc::parse_error, "not a rational \"" + text + "\"");
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    mpz_class d(den);
    if (d == 0) fail(Errc::parse_error, "zero denominator in \"" + text + "\"");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_zero(std::span<const Rational> v)
{
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

inline QVector to_q(std::span<const std::int64_t> v)
{
    QVector out;
    out.reserve(v.size());
    for (auto x : v) out.push_back(make_rational(x));
    return out;
}

inline std::int64_t to_int64(const mpz_class& z)
{
    if (!z.fits_slong_p()) fail(Errc::cap_exceeded, "integer entry exceeds 64 bits: " + z.get_str());
    return z.get_si();
}

/// Smallest integer multiple with coprime entries and the same direction.
inline ZVector primitive(std::span<const Rational> v)
{
    mpz_class lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(v.size());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class s = x.get_num() * (lcm / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
        scaled.push_back(s);
    }
    ZVector out;
    out.reserve(v.size());
    for (auto& s : scaled) out.push_back(g == 0 ? 0 : to_int64(s / g));
    return out;
}

inline ZVector primitive(std::span<const std::int64_t> v) { return primitive(to_q(v)); }

inline std::vector<std::string> to_strings(std::span<const Rational> v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline double to_double(const Rational& r) { return r.get_d(); }

inline std::vector<double> to_double(std::span<const Rational> v)
{
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_d());
    return out;
}

/// Exact conversion: every finite double is a dyadic rational.
inline Rational from_double(double x)
{
    Rational r(x);
    r.canonicalize();
    return r;
}

} // namespace propact
