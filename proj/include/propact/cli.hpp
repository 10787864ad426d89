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

// Command-line front end. Exit codes: 0 computed (whatever the verdict),
// 1 input or validation error, 2 cap or resource limit.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "propact/acceptance.hpp"

namespace propact::cli {

using json_io::Json;

struct Globals {
    bool json = false;
    bool csv = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::uint64_t cap = kDefaultWeylCap;
    std::string file;
};

struct Report {
    explicit Report(std::string name) : command(std::move(name)) {}

    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    std::string method;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> warnings;
    std::string csv;  // tabular rendering, when the command has one
    std::string text; // preferred text rendering, if any
};

inline Json report_json(const Report& r)
{
    Json j{{"version", json_io::kSchemaVersion},
           {"command", r.command},
           {"inputs", r.inputs},
           {"result", r.result},
           {"method", r.method},
           {"warnings", r.warnings}};
    j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
    return j;
}

/// Indented key: value lines.
inline void render_text(const Json& j, std::ostream& os, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (v.is_object() && !v.empty()) {
            os << pad << it.key() << ":\n";
            render_text(v, os, indent + 2);
        } else if (v.is_string()) {
            os << pad << it.key() << ": " << v.get<std::string>() << "\n";
        } else {
            os << pad << it.key() << ": " << v.dump() << "\n";
        }
    }
}

inline void emit(const Report& r, const Globals& g, std::ostream& os)
{
    if (g.json) {
        os << report_json(r).dump(2) << "\n";
    } else if (g.csv && !r.csv.empty()) {
        os << r.csv;
    } else if (!r.text.empty()) {
        os << r.text;
    } else {
        os << r.command << " (" << r.method << ")\n";
        render_text(r.result, os, 2);
        for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    }
}

// --- input helpers -------------------------------------------------------

inline Json parse_json_text(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(Errc::parse_error, what + ": invalid JSON (" + e.what() + ")");
    }
}

/// Problem file: a JSON object holding "version" plus the payload fields.
inline Json load_problem(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open problem file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    Json j = parse_json_text(ss.str(), path);
    if (!j.is_object()) fail(Errc::parse_error, "$: expected an object");
    if (!j.contains("version")) fail(Errc::parse_error, "$.version: missing field");
    if (j["version"] != Json(json_io::kSchemaVersion)) fail(Errc::parse_error, "$.version: unsupported version");
    j.erase("version");
    return j;
}

inline std::vector<double> parse_doubles(const std::string& csv, const std::string& what)
{
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(Errc::parse_error, what + ": cannot read number '" + item + "'");
        }
    }
    return out;
}

inline std::vector<int> parse_ints(const std::string& csv, const std::string& what)
{
    std::vector<int> out;
    for (double d : parse_doubles(csv, what)) {
        if (d != std::floor(d)) fail(Errc::parse_error, what + ": expected integers");
        out.push_back(static_cast<int>(d));
    }
    return out;
}

/// "SL(3)", "GL(2)", "Sp(4)" (matrix size 2n), "SO(p,q)", "O(p,q)",
/// "SU(p,q)", "U(p,q)".
inline MatrixGroupSpec parse_group(const std::string& text)
{
    static const std::regex re(R"(^\s*([A-Za-z]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) fail(Errc::parse_error, "cannot parse group '" + text + "'");
    GroupFamily f = parse_group_family(m[1]);
    int a = std::stoi(m[2]);
    bool two = m[3].matched;
    MatrixGroupSpec s;
    switch (f) {
    case GroupFamily::SL_R:
    case GroupFamily::GL_R:
        if (two) fail(Errc::parse_error, "'" + text + "' takes one parameter");
        s = f == GroupFamily::SL_R ? MatrixGroupSpec::sl(a) : MatrixGroupSpec::gl(a);
        break;
    case GroupFamily::Sp_R:
        if (two || a % 2 != 0) fail(Errc::parse_error, "'" + text + "': use Sp(2n)");
        s = MatrixGroupSpec::sp(a / 2);
        break;
    default:
        if (!two) fail(Errc::parse_error, "'" + text + "' takes a signature (p,q)");
        s = {f, 0, a, std::stoi(m[3])};
    }
    s.validate();
    return s;
}

// --- commands --------------------------------------------------------------

inline Report cmd_mu(const Globals& g, const std::string& matrix)
{
    Json payload;
    if (!g.file.empty()) {
        payload = load_problem(g.file);
    } else {
        if (matrix.empty()) fail(Errc::parse_error, "--matrix: required (or --file)");
        payload = {{"matrix", parse_json_text(matrix, "--matrix")}};
    }
    json_io::ObjectReader r(payload, "$");
    auto m = json_io::read_dmatrix(r.at("matrix"), "$.matrix");
    r.finish();
    Report rep{"mu"};
    rep.inputs = {{"matrix", m}};
    auto mu = cartan_projection_gl(m);
    rep.result = {{"mu", mu}, {"log_abs_det", log_abs_det(m)}};
    rep.method = "one_sided_jacobi_svd";
    return rep;
}

inline ReductivePair pair_from(const Globals& g, const std::string& family, int rank, const std::string& a_l,
                               const std::string& a_h)
{
    Json payload;
    if (!g.file.empty()) {
        payload = load_problem(g.file);
    } else {
        if (family.empty() || rank < 1) fail(Errc::parse_error, "--family and --rank: required (or --file)");
        payload = {{"ambient", {{"family", family}, {"rank", rank}}},
                   {"a_L", {{"basis", parse_json_text(a_l, "--a-L")}}},
                   {"a_H", {{"basis", parse_json_text(a_h, "--a-H")}}}};
    }
    return json_io::read_pair(payload, "$");
}

inline Json pair_inputs(const ReductivePair& p)
{
    return {{"ambient", json_io::datum_json(p.datum)},
            {"a_L", json_io::subspace_json(p.a_L)},
            {"a_H", json_io::subspace_json(p.a_H)}};
}

inline Report cmd_proper(const Globals& g, const ReductivePair& pair)
{
    Report rep{"proper"};
    rep.inputs = pair_inputs(pair);
    auto v = is_proper_reductive(pair, {g.threads, g.cap});
    rep.result = json_io::verdict_json(v);
    rep.result["witness_verified"] = verify_witness(pair, v);
    rep.method = "oracle:" + to_string(v.method);
    return rep;
}

inline Report cmd_similar(const Globals& g, const ReductivePair& pair)
{
    Report rep{"similar"};
    rep.inputs = pair_inputs(pair);
    rep.result = {{"similar", is_similar_reductive(pair, g.cap)}};
    rep.method = "oracle:weyl_orbit_union";
    return rep;
}

inline Report cmd_calabi_markus(const Globals& g, const std::string& gs, const std::string& hs)
{
    auto G = parse_group(gs), H = parse_group(hs);
    Report rep{"calabi-markus"};
    rep.inputs = {{"G", describe(G)}, {"H", describe(H)}};
    std::optional<SplitData> split;
    if (G.family == GroupFamily::SO && H.family == GroupFamily::SO && H.p <= G.p && H.q <= G.q) {
        auto datum = orthogonal_restricted_datum(G.p, G.q);
        auto rank_h = static_cast<std::size_t>(std::min(H.p, H.q));
        split = SplitData{datum, datum ? coordinate_subspace(datum->ambient_dim, rank_h) : RationalSubspace(0)};
    }
    auto cm = calabi_markus(G, H, split, g.cap);
    rep.result = {{"infinite_discontinuous_group", cm.infinite_discontinuous},
                  {"rank_G", cm.rank_G},
                  {"rank_H", cm.rank_H}};
    rep.result["similarity_route"] = cm.similarity_route ? Json(*cm.similarity_route) : Json(nullptr);
    rep.method = split ? "closed_form:rank+oracle:similarity" : "closed_form:rank";
    if (!split) rep.warnings.push_back("no split data for this pair; rank test only");
    return rep;
}

inline Report cmd_cocompact(std::optional<long> dG, std::optional<long> dH, std::optional<long> dL,
                            const std::string& gs, const std::string& hs, const std::string& ls)
{
    Report rep{"cocompact"};
    auto d_of = [](const std::string& s) { return static_cast<long>(cartan_dims(parse_group(s)).dim_p); };
    if (!gs.empty()) dG = d_of(gs), rep.inputs["G"] = gs;
    if (!hs.empty()) dH = d_of(hs), rep.inputs["H"] = hs;
    if (!ls.empty()) dL = d_of(ls), rep.inputs["L"] = ls;
    if (!dG || !dH || !dL) fail(Errc::parse_error, "need d(G), d(H), d(L) via --d-G/--d-H/--d-L or --G/--H/--L");
    rep.inputs["d_G"] = *dG;
    rep.inputs["d_H"] = *dH;
    rep.inputs["d_L"] = *dL;
    rep.result = {{"cocompact_standard", cocompact_standard_check(*dG, *dH, *dL)}};
    rep.method = "closed_form:dimension_count";
    return rep;
}

inline Report cmd_sl2(const Globals& g, int n, int m, const std::string& parts_text)
{
    auto parts = parse_ints(parts_text, "--partition");
    auto p = Partition::from_parts(parts);
    if (n != 0 && n != p.n()) fail(Errc::parse_error, "--n: partition sums to " + std::to_string(p.n()));
    Report rep{"sl2"};
    rep.inputs = {{"n", p.n()}, {"m", m}, {"partition", p.parts()}};
    auto v = sl2_proper_oracle(p, m, {g.threads, g.cap});
    rep.result = json_io::verdict_json(v);
    rep.result["ray"] = json_io::to_json(sl2_ray(p));
    rep.result["zero_count_shortcut"] = sl2_proper_zero_count(p, m);
    rep.result["printed_inequality"] = sl2_proper_printed_formula(p, m);
    rep.result["irreducible_closed_form"] = p.is_irreducible() ? Json(sl2_proper_irreducible(p.n(), m)) : Json(nullptr);
    rep.method = "oracle:weyl_exhaustive";
    return rep;
}

inline Report cmd_sl2_audit(const Globals& g, int n_max)
{
    Report rep{"sl2-audit"};
    rep.inputs = {{"n_max", n_max}};
    auto a = sl2_formula_audit(n_max, {g.threads, g.cap});
    rep.result = json_io::sl2_audit_json(a, true);
    rep.method = "oracle:weyl_exhaustive vs closed forms";
    std::ostringstream csv, txt;
    csv << "n,m,partition,oracle,zero_count,printed,irreducible\n";
    for (const auto& r : a.rows) {
        std::string parts;
        for (int x : r.parts) parts += (parts.empty() ? "" : " ") + std::to_string(x);
        csv << r.n << "," << r.m << "," << parts << "," << r.oracle << "," << r.zero_count << "," << r.printed << ","
            << (r.irreducible ? std::to_string(*r.irreducible) : "") << "\n";
    }
    rep.csv = csv.str();
    txt << "cases: " << a.rows.size() << "\n"
        << "zero-count shortcut disagreements: " << a.zero_count_disagreements << "\n"
        << "irreducible closed form disagreements: " << a.irreducible_disagreements << " of " << a.irreducible_cases
        << "\n"
        << "printed inequality disagreements: " << a.printed_disagreements << "\n";
    rep.text = txt.str();
    return rep;
}

inline std::pair<RootDatum, WeightSystem> weight_problem(const Globals& g, const std::string& family, int rank,
                                                         const std::string& weights, int copies)
{
    if (!g.file.empty()) return json_io::read_weight_problem(load_problem(g.file), "$");
    if (family.empty() || rank < 1) fail(Errc::parse_error, "--family and --rank: required (or --file)");
    auto d = build_root_datum(parse_family(family), rank);
    WeightSystem base;
    if (weights == "standard")
        base = weights_standard(d);
    else if (weights == "adjoint")
        base = weights_adjoint(d);
    else
        fail(Errc::parse_error, "--weights: expected 'standard' or 'adjoint'");
    if (copies < 1) fail(Errc::parse_error, "--copies: must be >= 1");
    return {d, weights_direct_sum(std::vector<WeightSystem>(static_cast<std::size_t>(copies), base))};
}

inline Report cmd_pv(const Globals& g, const std::string& name, const RootDatum& d, const WeightSystem& ws,
                     bool allow_infinite)
{
    Report rep{name};
    rep.inputs = {{"datum", json_io::datum_json(d)}, {"weights", json_io::weights_json(ws)}, {"label", ws.label()}};
    auto pv = p_V(ws, d, {g.threads, 1'000'000, allow_infinite});
    rep.result = json_io::pv_json(pv);
    rep.result["default_convention"] = "derived_chh";
    rep.method = "exact:arrangement_rays";
    return rep;
}

inline Shape shape_from(const std::string& kind, const std::string& half_widths, double radius,
                        const std::string& blocks, std::size_t dim)
{
    switch (parse_shape_kind(kind)) {
    case ShapeKind::box:
        return Shape::box(half_widths.empty() ? std::vector<double>(dim, 1.0) : parse_doubles(half_widths, "--half-widths"));
    case ShapeKind::ball: return Shape::ball(dim, radius);
    default: {
        std::vector<std::size_t> b;
        if (blocks.empty())
            b.push_back(dim);
        else
            for (int x : parse_ints(blocks, "--blocks")) {
                if (x < 1) fail(Errc::parse_error, "--blocks: sizes must be positive");
                b.push_back(static_cast<std::size_t>(x));
            }
        return Shape::k_invariant_ball(b, radius);
    }
    }
}

inline std::vector<double> t_grid_from(const std::string& text)
{
    auto grid = parse_doubles(text, "--t-grid");
    if (grid.empty()) fail(Errc::parse_error, "--t-grid: empty");
    return grid;
}

inline Report cmd_vol_sim(const Globals& g, const Shape& shape, const std::vector<double>& exps,
                          const std::vector<double>& grid, const MCConfig& cfg)
{
    Report rep{"vol sim"};
    rep.seed = cfg.seed;
    rep.inputs = {{"shape", to_string(shape.kind)}, {"dim", shape.dim}, {"exponents", exps}, {"t_grid", grid},
                  {"samples", cfg.samples}, {"shards", cfg.shards}};
    if (exps.size() != shape.dim) fail(Errc::dimension_mismatch, "--exponents: expected " + std::to_string(shape.dim) + " entries");
    Json rows = Json::array();
    std::ostringstream csv;
    csv << "t,estimate,stderr,exact\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        MCConfig c = cfg;
        c.seed = grid_seed(cfg.seed, i);
        auto r = mc_overlap(shape, diagonal_flow(exps, grid[i]), c);
        Json row{{"t", grid[i]}, {"estimate", r.estimate}, {"stderr", r.std_err}};
        std::string exact;
        if (shape.kind == ShapeKind::box) {
            double e = exact_box_overlap(shape.half_widths, exps, grid[i]);
            row["exact"] = e;
            exact = Json(e).dump();
        } else {
            row["exact"] = nullptr;
        }
        csv << Json(grid[i]).dump() << "," << Json(r.estimate).dump() << "," << Json(r.std_err).dump() << "," << exact
            << "\n";
        rows.push_back(std::move(row));
    }
    rep.result = {{"rows", rows}};
    try {
        auto sw = sandwich_check(shape, exps, grid, cfg);
        rep.result["sandwich"] = {{"C1", sw.c1}, {"C2", sw.c2}, {"pass", sw.pass}};
    } catch (const Error& e) {
        if (e.code() != Errc::insufficient_signal) throw;
        rep.warnings.push_back(e.what());
    }
    rep.csv = csv.str();
    rep.method = "monte_carlo:philox4x32-10";
    (void)g;
    return rep;
}

inline std::vector<std::vector<double>> default_directions(int n)
{
    if (n == 2) return {{std::sqrt(0.5), -std::sqrt(0.5)}};
    if (n == 3) return acceptance::sl3_directions();
    // rho-direction (n-1, n-3, ..., 1-n), normalized
    std::vector<double> u;
    for (int i = 0; i < n; ++i) u.push_back(n - 1 - 2.0 * i);
    double s = norm2(u);
    for (auto& x : u) x /= s;
    return {u};
}

inline Report cmd_vol_fit_q(const Globals& g, int n, int copies, const Shape& shape,
                            const std::vector<std::vector<double>>& dirs, const std::vector<double>& grid,
                            const MCConfig& cfg)
{
    Report rep{"vol fit-q"};
    rep.seed = cfg.seed;
    rep.inputs = {{"group", describe(MatrixGroupSpec::sl(n))}, {"copies", copies}, {"shape", to_string(shape.kind)},
                  {"directions", dirs}, {"t_grid", grid}, {"samples", cfg.samples}, {"shards", cfg.shards}};
    auto q = q_estimate(MatrixGroupSpec::sl(n), copies, shape, dirs, grid, cfg);
    rep.result = json_io::q_estimate_json(q);
    auto d = build_root_datum(Family::A, n - 1);
    auto ws = weights_direct_sum(std::vector<WeightSystem>(static_cast<std::size_t>(copies), weights_standard(d)));
    rep.result["exact_pv"] = pv_string(p_V(ws, d, {g.threads}));
    rep.warnings = q.warnings;
    std::ostringstream csv;
    csv << "direction,rho_h,kappa,ratio,r2\n";
    for (const auto& r : q.rows) {
        std::string dir;
        for (double x : r.direction) dir += (dir.empty() ? "" : " ") + Json(x).dump();
        csv << dir << "," << Json(r.rho_h).dump() << "," << Json(r.kappa).dump() << "," << Json(r.ratio).dump() << ","
            << Json(r.r2).dump() << "\n";
    }
    rep.csv = csv.str();
    rep.method = "monte_carlo:philox4x32-10 + least_squares";
    return rep;
}

inline Report cmd_spaceform(int p, int q, const std::string& curvature)
{
    auto c = parse_curvature(curvature);
    auto [G, H] = space_form_pair(p, q, c);
    Report rep{"catalog spaceform"};
    rep.inputs = {{"p", p}, {"q", q}, {"curvature", to_string(c)}};
    rep.result = {{"G", describe(G)},
                  {"H", describe(H)},
                  {"cm_infinite", cm_infinite(p, q)},
                  {"surface_group_admissible", surface_group_admissible(p, q)},
                  {"compact_quotient_necessary", compact_quotient_necessary(p, q)},
                  {"conjecture_g4_member", conjecture_g4_member(p, q)},
                  {"tangential_admits_compact", tangential_admits_compact(p, q)}};
    if (q >= 1) rep.result["radon_hurwitz_q"] = radon_hurwitz(q);
    rep.method = "closed_form:catalog";
    return rep;
}

inline Report cmd_tangential(int p_max)
{
    Report rep{"catalog tangential-table"};
    rep.inputs = {{"p_max", p_max}, {"q_max", kTangentialQMax}};
    auto rows = tangential_table_audit(p_max);
    rep.result = {{"rows", json_io::audit_rows_json(rows)}};
    std::ostringstream md, csv;
    md << "| p | computed | printed | match |\n|---|---|---|---|\n";
    csv << "p,computed,printed,match\n";
    for (const auto& r : rows) {
        md << "| " << r.p << " | " << r.computed << " | " << r.printed << " | " << (r.match ? "yes" : "NO") << " |\n";
        csv << r.p << "," << r.computed << "," << r.printed << "," << r.match << "\n";
    }
    rep.text = md.str();
    rep.csv = csv.str();
    rep.method = "closed_form:radon_hurwitz vs printed table";
    return rep;
}

inline int cmd_selftest(const Globals& g, std::uint64_t samples, std::ostream& os)
{
    acceptance::Options opt{g.seed, g.threads, samples, 100'000};
    std::vector<acceptance::CriterionResult> results;
    for (const auto& c : acceptance::battery()) results.push_back(c(opt));
    auto j = acceptance::to_json(results, opt);
    if (g.json) {
        os << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "\n";
    }
    return j["all_pass"].get<bool>() ? 0 : 1;
}

// --- dispatch -------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"propact: properness of reductive group actions"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--csv", g.csv, "CSV output for tabular results");
    app.add_option("--seed", g.seed, "random seed (default 0)");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--cap", g.cap, "Weyl enumeration cap (default 1e7)");
    app.add_option("--file", g.file, "problem file (JSON)");

    std::function<Report()> action;
    std::function<int()> raw_action;

    auto* mu = app.add_subcommand("mu", "Cartan projection of a GL(n,R) matrix");
    std::string matrix;
    mu->add_option("--matrix", matrix, "matrix as JSON, e.g. [[2,0],[0,0.5]]");
    mu->callback([&] { action = [&] { return cmd_mu(g, matrix); }; });

    std::string family, a_l = "[]", a_h = "[]";
    int rank = 0;
    auto add_pair_opts = [&](CLI::App* s) {
        s->add_option("--family", family, "root system family A, B, C, D, BC");
        s->add_option("--rank", rank, "rank");
        s->add_option("--a-L", a_l, "basis of a_L as JSON rows of rationals");
        s->add_option("--a-H", a_h, "basis of a_H as JSON rows of rationals");
    };
    auto* proper = app.add_subcommand("proper", "properness verdict with witness");
    add_pair_opts(proper);
    proper->callback([&] { action = [&] { return cmd_proper(g, pair_from(g, family, rank, a_l, a_h)); }; });
    auto* similar = app.add_subcommand("similar", "similarity of Weyl orbits of a_L and a_H");
    add_pair_opts(similar);
    similar->callback([&] { action = [&] { return cmd_similar(g, pair_from(g, family, rank, a_l, a_h)); }; });

    std::string gs, hs, ls;
    auto* cm = app.add_subcommand("calabi-markus", "infinite discontinuous groups for G/H");
    cm->add_option("--G", gs, "group, e.g. 'SO(4,1)'")->required();
    cm->add_option("--H", hs, "subgroup, e.g. 'SO(3,1)'")->required();
    cm->callback([&] { action = [&] { return cmd_calabi_markus(g, gs, hs); }; });

    std::optional<long> dG, dH, dL;
    auto* coc = app.add_subcommand("cocompact", "d(L) + d(H) = d(G) check");
    coc->add_option("--d-G", dG);
    coc->add_option("--d-H", dH);
    coc->add_option("--d-L", dL);
    coc->add_option("--G", gs);
    coc->add_option("--H", hs);
    coc->add_option("--L", ls);
    coc->callback([&] { action = [&] { return cmd_cocompact(dG, dH, dL, gs, hs, ls); }; });

    int n = 0, m = 0;
    std::string partition;
    auto* sl2 = app.add_subcommand("sl2", "SL(2,R) -> SL(n,R) acting on SL(n,R)/SL(m,R)");
    sl2->add_option("--n", n);
    sl2->add_option("--m", m)->required();
    sl2->add_option("--partition", partition, "parts, e.g. 3,2")->required();
    sl2->callback([&] { action = [&] { return cmd_sl2(g, n, m, partition); }; });

    int n_max = 8;
    auto* audit = app.add_subcommand("sl2-audit", "closed forms vs exhaustive oracle");
    audit->add_option("--n-max", n_max)->check(CLI::Range(2, 10));
    audit->callback([&] { action = [&] { return cmd_sl2_audit(g, n_max); }; });

    std::string weights = "standard";
    int copies = 1;
    bool allow_infinite = false;
    auto add_pv_opts = [&](CLI::App* s) {
        s->add_option("--family", family);
        s->add_option("--rank", rank);
        s->add_option("--weights", weights, "standard or adjoint");
        s->add_option("--copies", copies, "direct sum of this many copies");
        s->add_flag("--allow-infinite", allow_infinite, "report +inf instead of failing on a non-compact kernel");
    };
    auto* pv = app.add_subcommand("pv", "exact p_V");
    add_pv_opts(pv);
    pv->callback([&] {
        action = [&] {
            auto [d, ws] = weight_problem(g, family, rank, weights, copies);
            return cmd_pv(g, "pv", d, ws, allow_infinite);
        };
    });
    auto* temp = app.add_subcommand("tempered", "temperedness of L^2(V) under both conventions");
    add_pv_opts(temp);
    temp->callback([&] {
        action = [&] {
            auto [d, ws] = weight_problem(g, family, rank, weights, copies);
            return cmd_pv(g, "tempered", d, ws, allow_infinite);
        };
    });

    auto* vol = app.add_subcommand("vol", "dynamical volume estimation");
    vol->require_subcommand(1);
    std::string shape_kind = "box", half_widths, blocks, exps_text, grid_text = "0,0.5,1,1.5,2,2.5,3,3.5,4";
    std::string dirs_text;
    double radius = 1.0;
    std::uint64_t samples = 1'000'000;
    std::uint32_t shards = 64;
    auto add_vol_opts = [&](CLI::App* s) {
        s->add_option("--shape", shape_kind, "box, ball or k_invariant_ball");
        s->add_option("--half-widths", half_widths, "box half widths, e.g. 1,1");
        s->add_option("--radius", radius);
        s->add_option("--blocks", blocks, "block sizes of the K-invariant ball");
        s->add_option("--t-grid", grid_text, "comma separated t values");
        s->add_option("--samples", samples);
        s->add_option("--shards", shards);
    };
    auto* sim = vol->add_subcommand("sim", "MC overlap along a diagonal flow");
    add_vol_opts(sim);
    sim->add_option("--exponents", exps_text, "flow exponents, e.g. 1,-1")->required();
    sim->callback([&] {
        action = [&] {
            auto exps = parse_doubles(exps_text, "--exponents");
            auto shape = shape_from(shape_kind, half_widths, radius, blocks, exps.size());
            return cmd_vol_sim(g, shape, exps, t_grid_from(grid_text), {samples, g.seed, shards, g.threads});
        };
    });
    auto* fitq = vol->add_subcommand("fit-q", "empirical q(G;V) for SL(n,R)");
    add_vol_opts(fitq);
    int group_n = 2;
    fitq->add_option("--n", group_n)->check(CLI::Range(2, 8));
    fitq->add_option("--copies", copies);
    fitq->add_option("--directions", dirs_text, "JSON list of dominant directions");
    fitq->callback([&] {
        action = [&] {
            auto dim = static_cast<std::size_t>(group_n * copies);
            auto shape = shape_from(shape_kind, half_widths, radius, blocks, dim);
            std::vector<std::vector<double>> dirs;
            if (dirs_text.empty()) {
                dirs = default_directions(group_n);
            } else {
                auto j = parse_json_text(dirs_text, "--directions");
                const auto& arr = json_io::read_array(j, "--directions");
                for (std::size_t i = 0; i < arr.size(); ++i)
                    dirs.push_back(json_io::read_dvector(arr[i], "--directions[" + std::to_string(i) + "]"));
            }
            return cmd_vol_fit_q(g, group_n, copies, shape, dirs, t_grid_from(grid_text),
                                 {samples, g.seed, shards, g.threads});
        };
    });

    auto* cat = app.add_subcommand("catalog", "space-form catalog");
    cat->require_subcommand(1);
    int p = 0, q = 0, p_max = 11;
    std::string curvature = "positive";
    auto* sf = cat->add_subcommand("spaceform", "predicates for X(p,q)");
    sf->add_option("--p", p)->required();
    sf->add_option("--q", q)->required();
    sf->add_option("--curvature", curvature, "positive or negative");
    sf->callback([&] { action = [&] { return cmd_spaceform(p, q, curvature); }; });
    auto* tt = cat->add_subcommand("tangential-table", "Radon-Hurwitz table audit");
    tt->add_option("--p-max", p_max)->check(CLI::Range(1, 64));
    tt->callback([&] { action = [&] { return cmd_tangential(p_max); }; });

    std::uint64_t selftest_samples = 1'000'000;
    auto* st = app.add_subcommand("selftest", "run the acceptance battery");
    st->add_option("--samples", selftest_samples, "MC samples for the q estimates")->check(CLI::Range(1000ull, 100'000'000ull));
    st->callback([&] { raw_action = [&] { return cmd_selftest(g, selftest_samples, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    try {
        if (raw_action) return raw_action();
        emit(action(), g, out);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_resource_error(e.code()) ? 2 : 1;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return 2;
    }
}

} // namespace propact::cli
