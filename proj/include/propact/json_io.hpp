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

// JSON schemas for problem files and reports. Rationals travel as "p/q"
// strings; objects are read strictly (unknown keys are errors) and every
// error names the offending field path.

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "propact/catalog.hpp"
#include "propact/properness.hpp"
#include "propact/tempered.hpp"
#include "propact/volume.hpp"

namespace propact::json_io {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Strict view of one JSON object: every key must be consumed.
class ObjectReader {
public:
    ObjectReader(const Json& j, std::string path) : j_(j), path_(std::move(path))
    {
        if (!j_.is_object()) fail(Errc::parse_error, path_ + ": expected an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const Json& at(const std::string& key)
    {
        if (!j_.contains(key)) fail(Errc::parse_error, path_ + "." + key + ": missing field");
        used_.insert(key);
        return j_.at(key);
    }

    const Json* maybe(const std::string& key)
    {
        if (!j_.contains(key)) return nullptr;
        used_.insert(key);
        return &j_.at(key);
    }

    std::string child(const std::string& key) const { return path_ + "." + key; }

    void finish() const
    {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.count(it.key())) fail(Errc::parse_error, path_ + "." + it.key() + ": unknown field");
    }

private:
    const Json& j_;
    std::string path_;
    std::set<std::string> used_;
};

inline std::int64_t read_int(const Json& j, const std::string& path)
{
    if (!j.is_number_integer()) fail(Errc::parse_error, path + ": expected an integer");
    return j.get<std::int64_t>();
}

inline double read_double(const Json& j, const std::string& path)
{
    if (!j.is_number()) fail(Errc::parse_error, path + ": expected a number");
    return j.get<double>();
}

inline std::string read_string(const Json& j, const std::string& path)
{
    if (!j.is_string()) fail(Errc::parse_error, path + ": expected a string");
    return j.get<std::string>();
}

/// "p/q" strings; plain JSON integers are accepted as well.
inline Rational read_rational(const Json& j, const std::string& path)
{
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(Errc::parse_error, path + ": expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(Errc::parse_error, path + ": " + e.what());
    }
}

inline const Json& read_array(const Json& j, const std::string& path)
{
    if (!j.is_array()) fail(Errc::parse_error, path + ": expected an array");
    return j;
}

inline QVector read_qvector(const Json& j, const std::string& path)
{
    QVector v;
    const auto& a = read_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) v.push_back(read_rational(a[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline QMatrix read_qmatrix(const Json& j, const std::string& path)
{
    QMatrix m;
    const auto& a = read_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) m.push_back(read_qvector(a[i], path + "[" + std::to_string(i) + "]"));
    return m;
}

inline std::vector<double> read_dvector(const Json& j, const std::string& path)
{
    std::vector<double> v;
    const auto& a = read_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) v.push_back(read_double(a[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline DMatrix read_dmatrix(const Json& j, const std::string& path)
{
    DMatrix m;
    const auto& a = read_array(j, path);
    for (std::size_t i = 0; i < a.size(); ++i) m.push_back(read_dvector(a[i], path + "[" + std::to_string(i) + "]"));
    return m;
}

/// {"family": "A", "rank": 2}
inline RootDatum read_datum(const Json& j, const std::string& path)
{
    ObjectReader r(j, path);
    auto fam = read_string(r.at("family"), r.child("family"));
    auto rank = read_int(r.at("rank"), r.child("rank"));
    r.finish();
    try {
        return build_root_datum(parse_family(fam), static_cast<int>(rank));
    } catch (const Error& e) {
        fail(Errc::parse_error, path + ": " + e.what());
    }
}

/// {"basis": [["1","0","-1"], ...]}; an empty basis is the zero subspace.
inline RationalSubspace read_subspace(const Json& j, const std::string& path, std::size_t ambient)
{
    ObjectReader r(j, path);
    auto basis = read_qmatrix(r.at("basis"), r.child("basis"));
    r.finish();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].size() != ambient)
            fail(Errc::parse_error, r.child("basis") + "[" + std::to_string(i) + "]: expected " +
                                        std::to_string(ambient) + " entries");
    return basis.empty() ? RationalSubspace(ambient) : RationalSubspace::span(basis, ambient);
}

/// {"ambient": datum, "a_L": subspace, "a_H": subspace}
inline ReductivePair read_pair(const Json& j, const std::string& path)
{
    ObjectReader r(j, path);
    ReductivePair pair{read_datum(r.at("ambient"), r.child("ambient")), {}, {}};
    pair.a_L = read_subspace(r.at("a_L"), r.child("a_L"), pair.datum.ambient_dim);
    pair.a_H = read_subspace(r.at("a_H"), r.child("a_H"), pair.datum.ambient_dim);
    r.finish();
    try {
        pair.validate();
    } catch (const Error& e) {
        fail(Errc::parse_error, path + ": " + e.what());
    }
    return pair;
}

/// {"datum": datum, "weights": [{"covector": [...], "mult": 1}, ...]}
inline std::pair<RootDatum, WeightSystem> read_weight_problem(const Json& j, const std::string& path)
{
    ObjectReader r(j, path);
    auto datum = read_datum(r.at("datum"), r.child("datum"));
    const auto& arr = read_array(r.at("weights"), r.child("weights"));
    std::string label;
    if (auto* l = r.maybe("label")) label = read_string(*l, r.child("label"));
    r.finish();
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string wp = r.child("weights") + "[" + std::to_string(i) + "]";
        ObjectReader w(arr[i], wp);
        Weight wt;
        wt.covector = read_qvector(w.at("covector"), w.child("covector"));
        if (auto* m = w.maybe("mult")) wt.mult = read_int(*m, w.child("mult"));
        w.finish();
        if (wt.covector.size() != datum.ambient_dim)
            fail(Errc::parse_error, w.child("covector") + ": expected " + std::to_string(datum.ambient_dim) + " entries");
        if (wt.mult < 1) fail(Errc::parse_error, w.child("mult") + ": must be >= 1");
        ws.push_back(std::move(wt));
    }
    return {datum, WeightSystem(datum.ambient_dim, std::move(ws), label)};
}

// --- writers -------------------------------------------------------------

inline Json to_json(const Rational& r) { return to_string(r); }

inline Json to_json(std::span<const Rational> v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline Json to_json(std::span<const std::int64_t> v)
{
    Json a = Json::array();
    for (auto x : v) a.push_back(std::to_string(x));
    return a;
}

inline Json datum_json(const RootDatum& d) { return {{"family", to_string(d.family)}, {"rank", d.rank}}; }

inline Json subspace_json(const RationalSubspace& s)
{
    Json b = Json::array();
    for (const auto& row : s.basis()) b.push_back(to_json(row));
    return {{"basis", b}};
}

inline Json weyl_json(const WeylElement& w)
{
    Json m = Json::array();
    for (const auto& row : w.matrix()) m.push_back(row);
    return m;
}

inline Json verdict_json(const PropernessVerdict& v)
{
    Json out{{"proper", v.proper}, {"method", to_string(v.method)}};
    if (v.witness) {
        out["witness"] = {{"weyl", weyl_json(v.witness->weyl)},
                          {"weyl_index", v.witness->weyl_index},
                          {"vector", to_json(v.witness->vector)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline Json pv_json(const PvResult& r)
{
    Json out{{"value", pv_string(r)},
             {"argmax_ray", to_json(r.argmax_ray)},
             {"chamber_count", r.chamber_count},
             {"ray_count", r.ray_count},
             {"exact", true}};
    out["temperedness"] = {{"derived_chh", to_string(temperedness_verdict(r, TemperConvention::derived_chh))},
                           {"printed", to_string(temperedness_verdict(r, TemperConvention::printed))}};
    return out;
}

inline Json weights_json(const WeightSystem& ws)
{
    Json a = Json::array();
    for (const auto& w : ws.weights()) a.push_back({{"covector", to_json(w.covector)}, {"mult", w.mult}});
    return a;
}

inline Json fit_points_json(const std::vector<FitPoint>& pts)
{
    Json a = Json::array();
    for (const auto& p : pts)
        a.push_back({{"t", p.t}, {"estimate", p.estimate}, {"stderr", p.std_err}, {"used", p.used}});
    return a;
}

inline Json q_estimate_json(const QEstimate& q)
{
    Json rows = Json::array();
    for (const auto& r : q.rows)
        rows.push_back({{"direction", r.direction}, {"rho_h", r.rho_h}, {"kappa", r.kappa}, {"ratio", r.ratio},
                        {"r2", r.r2}});
    return {{"q_hat", q.q_hat}, {"directions", rows}, {"warnings", q.warnings}};
}

inline Json audit_rows_json(const std::vector<AuditRow>& rows)
{
    Json a = Json::array();
    for (const auto& r : rows)
        a.push_back({{"p", r.p}, {"computed", r.computed}, {"printed", r.printed}, {"match", r.match}});
    return a;
}

inline Json sl2_audit_json(const Sl2AuditReport& rep, bool include_rows)
{
    Json disagreements = Json::array();
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
        Json row{{"n", r.n}, {"m", r.m}, {"parts", r.parts}, {"oracle", r.oracle}, {"zero_count", r.zero_count},
                 {"printed", r.printed}};
        row["irreducible"] = r.irreducible ? Json(*r.irreducible) : Json(nullptr);
        if (r.printed != r.oracle) disagreements.push_back(row);
        if (include_rows) rows.push_back(std::move(row));
    }
    Json out{{"cases", rep.rows.size()},
             {"zero_count_disagreements", rep.zero_count_disagreements},
             {"printed_disagreements", rep.printed_disagreements},
             {"irreducible_cases", rep.irreducible_cases},
             {"irreducible_disagreements", rep.irreducible_disagreements},
             {"printed_disagreement_rows", disagreements}};
    if (include_rows) out["rows"] = rows;
    return out;
}

} // namespace propact::json_io
