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

// Overlap volumes vol(S cap gS) for linear maps g: the exact box formula,
// a sharded Monte Carlo estimator and decay-exponent fits along flows.

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "propact/cartan.hpp"
#include "propact/parallel.hpp"
#include "propact/random.hpp"

namespace propact {

enum class ShapeKind { box, ball, k_invariant_ball };

inline std::string to_string(ShapeKind k)
{
    switch (k) {
    case ShapeKind::box: return "box";
    case ShapeKind::ball: return "ball";
    default: return "k_invariant_ball";
    }
}

inline ShapeKind parse_shape_kind(const std::string& s)
{
    if (s == "box") return ShapeKind::box;
    if (s == "ball") return ShapeKind::ball;
    if (s == "k_invariant_ball") return ShapeKind::k_invariant_ball;
    fail(Errc::parse_error, "unknown shape kind '" + s + "'");
}

/// A bounded neighbourhood of the origin. The K-invariant ball is the
/// product of Euclidean balls over `blocks` (one block is the round ball).
struct Shape {
    ShapeKind kind = ShapeKind::box;
    std::size_t dim = 0;
    std::vector<double> half_widths;
    double radius = 1.0;
    std::vector<std::size_t> blocks;

    static Shape box(std::vector<double> r)
    {
        Shape s;
        s.dim = r.size();
        s.half_widths = std::move(r);
        s.validate();
        return s;
    }
    static Shape ball(std::size_t n, double radius)
    {
        Shape s;
        s.kind = ShapeKind::ball;
        s.dim = n;
        s.radius = radius;
        s.validate();
        return s;
    }
    static Shape k_invariant_ball(std::vector<std::size_t> blocks, double radius)
    {
        Shape s;
        s.kind = ShapeKind::k_invariant_ball;
        s.dim = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
        s.blocks = std::move(blocks);
        s.radius = radius;
        s.validate();
        return s;
    }

    void validate() const
    {
        if (dim == 0) fail(Errc::invalid_argument, "shape dimension must be positive");
        if (kind == ShapeKind::box) {
            if (half_widths.size() != dim) fail(Errc::dimension_mismatch, "half_widths length differs from dim");
            for (double r : half_widths)
                if (!(r > 0) || !std::isfinite(r)) fail(Errc::invalid_argument, "half widths must be positive");
        } else if (!(radius > 0) || !std::isfinite(radius)) {
            fail(Errc::invalid_argument, "radius must be positive");
        }
        if (kind == ShapeKind::k_invariant_ball)
            for (auto b : blocks)
                if (b == 0) fail(Errc::invalid_argument, "empty block");
    }

    std::vector<double> bounding_half_widths() const
    {
        return kind == ShapeKind::box ? half_widths : std::vector<double>(dim, radius);
    }

    bool contains(std::span<const double> x) const
    {
        switch (kind) {
        case ShapeKind::box:
            for (std::size_t i = 0; i < dim; ++i)
                if (std::abs(x[i]) > half_widths[i]) return false;
            return true;
        case ShapeKind::ball: {
            double s = 0;
            for (double v : x) s += v * v;
            return s <= radius * radius;
        }
        default: {
            std::size_t at = 0;
            for (auto b : blocks) {
                double s = 0;
                for (std::size_t i = at; i < at + b; ++i) s += x[i] * x[i];
                if (s > radius * radius) return false;
                at += b;
            }
            return true;
        }
        }
    }

    double volume() const
    {
        auto ball_volume = [](std::size_t n, double r) {
            double k = static_cast<double>(n);
            return std::pow(std::numbers::pi, k / 2) / std::tgamma(k / 2 + 1) * std::pow(r, k);
        };
        switch (kind) {
        case ShapeKind::box: {
            double v = 1;
            for (double r : half_widths) v *= 2 * r;
            return v;
        }
        case ShapeKind::ball: return ball_volume(dim, radius);
        default: {
            double v = 1;
            for (auto b : blocks) v *= ball_volume(b, radius);
            return v;
        }
        }
    }
};

/// vol(S cap gS) for the box S and g = diag(e^{t u_i}).
inline double exact_box_overlap(std::span<const double> half_widths, std::span<const double> u, double t)
{
    if (half_widths.size() != u.size()) fail(Errc::dimension_mismatch, "half_widths and exponents differ in length");
    double sum = 0, scale = 0;
    for (double x : u) {
        sum += x;
        scale = std::max(scale, std::abs(x));
    }
    if (std::abs(sum) > 1e-12 * std::max(1.0, scale)) fail(Errc::invalid_argument, "exponents must sum to zero");
    double v = 1;
    for (std::size_t i = 0; i < u.size(); ++i) v *= 2 * half_widths[i] * std::min(1.0, std::exp(t * u[i]));
    return v;
}

struct MCConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint32_t shards = 64;
    unsigned threads = 1;

    void validate() const
    {
        if (samples < 1000) fail(Errc::invalid_argument, "samples must be >= 1000");
        if (shards < 1) fail(Errc::invalid_argument, "shards must be >= 1");
    }
};

struct MCResult {
    double estimate = 0;
    double std_err = 0;
    std::uint64_t hits = 0;
    std::uint64_t samples = 0;
};

/// Uniform samples x in the bounding box, counting x in S with g^{-1}x in S.
/// Shard k draws its samples from stream k; hit counts add exactly, so
/// the estimate does not depend on the thread count.
inline MCResult mc_overlap(const Shape& shape, const DMatrix& g, const MCConfig& cfg)
{
    shape.validate();
    cfg.validate();
    require_square(g);
    if (g.size() != shape.dim) fail(Errc::dimension_mismatch, "map and shape differ in dimension");
    // Hadamard ratio |det g| / prod |row_i| lies in [0, 1] and ignores row scaling,
    // so long diagonal flows are not mistaken for singular maps.
    double log_rows = 0;
    for (const auto& row : g) log_rows += std::log(norm2(row));
    auto lu = lu_complete(g);
    if (!(lu.min_pivot > 0) || !(lu.log_abs_det - log_rows > std::log(kSingularTolerance)))
        fail(Errc::singular_map, "map is not invertible");
    const DMatrix ginv = inverse(g);
    const std::size_t n = shape.dim;
    const auto bound = shape.bounding_half_widths();
    double box_volume = 1;
    for (double r : bound) box_volume *= 2 * r;

    std::vector<std::uint64_t> hits(cfg.shards, 0);
    parallel_chunks(cfg.shards, cfg.shards, cfg.threads, [&](std::size_t shard, std::size_t, std::size_t) {
        const std::uint64_t base = cfg.samples / cfg.shards;
        const std::uint64_t count = base + (shard < cfg.samples % cfg.shards ? 1 : 0);
        CounterStream rng(cfg.seed, static_cast<std::uint32_t>(shard));
        std::vector<double> x(n), y(n);
        std::uint64_t h = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
            rng.fill(i, x);
            for (std::size_t k = 0; k < n; ++k) x[k] = (2 * x[k] - 1) * bound[k];
            if (!shape.contains(x)) continue;
            for (std::size_t r = 0; r < n; ++r) {
                double s = 0;
                for (std::size_t c = 0; c < n; ++c) s += ginv[r][c] * x[c];
                y[r] = s;
            }
            if (shape.contains(y)) ++h;
        }
        hits[shard] = h;
    });
    MCResult res;
    res.samples = cfg.samples;
    res.hits = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
    double p = static_cast<double>(res.hits) / static_cast<double>(cfg.samples);
    res.estimate = p * box_volume;
    res.std_err = box_volume * std::sqrt(p * (1 - p) / static_cast<double>(cfg.samples));
    return res;
}

inline DMatrix diagonal_flow(std::span<const double> exponents, double t)
{
    DMatrix g(exponents.size(), DVector(exponents.size(), 0.0));
    for (std::size_t i = 0; i < exponents.size(); ++i) g[i][i] = std::exp(t * exponents[i]);
    return g;
}

struct FitPoint {
    double t = 0;
    double estimate = 0;
    double std_err = 0;
    bool used = false;
};

struct DecayFit {
    std::vector<double> direction;
    double kappa = 0;
    double r2 = 0;
    std::pair<double, double> window{0, 0};
    std::vector<FitPoint> points;
};

/// Independent seed for grid point i, so points never share samples.
inline std::uint64_t grid_seed(std::uint64_t seed, std::size_t i) { return mix_seed(seed ^ mix_seed(i + 1)); }

inline DecayFit fit_log_linear(std::vector<FitPoint> pts, std::vector<double> direction)
{
    std::vector<std::pair<double, double>> xy;
    for (auto& p : pts) {
        p.used = p.estimate > 10 * p.std_err && p.estimate > 0;
        if (p.used) xy.emplace_back(p.t, std::log(p.estimate));
    }
    if (xy.size() < 4)
        fail(Errc::insufficient_signal, "only " + std::to_string(xy.size()) + " grid points above the noise floor");
    double mx = 0, my = 0;
    for (auto [x, y] : xy) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(xy.size());
    my /= static_cast<double>(xy.size());
    double sxx = 0, sxy = 0, syy = 0;
    for (auto [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    if (sxx == 0) fail(Errc::insufficient_signal, "grid points share one t");
    DecayFit fit;
    fit.direction = std::move(direction);
    double slope = sxy / sxx;
    fit.kappa = -slope;
    fit.r2 = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    fit.window = {xy.front().first, xy.back().first};
    fit.points = std::move(pts);
    return fit;
}

/// Least-squares decay rate of vol(S cap exp(tU)S) along t_grid, where
/// U = diag(exponents) acts on the shape's coordinates.
inline DecayFit decay_fit(const Shape& shape, std::span<const double> exponents, std::span<const double> t_grid,
                          const MCConfig& cfg)
{
    if (exponents.size() != shape.dim) fail(Errc::dimension_mismatch, "exponents and shape differ in dimension");
    std::vector<FitPoint> pts;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        MCConfig c = cfg;
        c.seed = grid_seed(cfg.seed, i);
        auto r = mc_overlap(shape, diagonal_flow(exponents, t_grid[i]), c);
        pts.push_back({t_grid[i], r.estimate, r.std_err, false});
    }
    return fit_log_linear(std::move(pts), {exponents.begin(), exponents.end()});
}

/// The same fit on exact box overlaps (no sampling noise).
inline DecayFit decay_fit_exact_box(std::span<const double> half_widths, std::span<const double> exponents,
                                    std::span<const double> t_grid)
{
    std::vector<FitPoint> pts;
    for (double t : t_grid) pts.push_back({t, exact_box_overlap(half_widths, exponents, t), 0.0, false});
    return fit_log_linear(std::move(pts), {exponents.begin(), exponents.end()});
}

struct QRow {
    std::vector<double> direction;
    double rho_h = 0;
    double kappa = 0;
    double ratio = 0;
    double r2 = 0;
};

struct QEstimate {
    double q_hat = 0;
    std::vector<QRow> rows;
    std::vector<std::string> warnings;
};

inline constexpr double kWallTolerance = 1e-6;

/// max over dominant directions u of rho_h(u) / kappa(u) for SL(n,R) acting
/// on `copies` copies of R^n by the diagonal flow exp(t u).
inline QEstimate q_estimate(const MatrixGroupSpec& group, int copies, const Shape& shape,
                            const std::vector<std::vector<double>>& directions, std::span<const double> t_grid,
                            const MCConfig& cfg)
{
    if (group.family != GroupFamily::SL_R) fail(Errc::unsupported_family, "q_estimate supports SL(n,R) only");
    group.validate();
    const auto n = static_cast<std::size_t>(group.n);
    if (copies < 1) fail(Errc::invalid_argument, "copies must be >= 1");
    if (shape.dim != n * static_cast<std::size_t>(copies))
        fail(Errc::dimension_mismatch, "shape dimension must be n * copies");
    QEstimate out;
    bool any = false;
    for (std::size_t d = 0; d < directions.size(); ++d) {
        const auto& u = directions[d];
        if (u.size() != n) fail(Errc::dimension_mismatch, "direction length must be n");
        double sum = 0, norm = 0;
        for (double x : u) {
            sum += x;
            norm += x * x;
        }
        if (std::abs(sum) > 1e-9 * std::max(1.0, std::sqrt(norm)))
            fail(Errc::invalid_argument, "direction must be trace-free");
        bool dominant = true, on_wall = false;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            double gap = u[i] - u[i + 1];
            dominant = dominant && gap >= -kWallTolerance;
            on_wall = on_wall || gap < kWallTolerance;
        }
        if (!dominant) fail(Errc::invalid_argument, "direction is not in the closed dominant chamber");
        if (on_wall) {
            out.warnings.push_back("direction " + std::to_string(d) + " lies within 1e-6 of a wall; skipped");
            continue;
        }
        double rho = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) rho += u[i] - u[j];
        std::vector<double> exps;
        for (int c = 0; c < copies; ++c) exps.insert(exps.end(), u.begin(), u.end());
        MCConfig c = cfg;
        c.seed = mix_seed(cfg.seed + 0x51ED270B27u * (d + 1));
        auto fit = decay_fit(shape, exps, t_grid, c);
        QRow row{u, rho, fit.kappa, rho / fit.kappa, fit.r2};
        if (!(fit.kappa > 0)) fail(Errc::insufficient_signal, "non-positive decay rate fitted");
        out.q_hat = any ? std::max(out.q_hat, row.ratio) : row.ratio;
        any = true;
        out.rows.push_back(std::move(row));
    }
    if (!any) fail(Errc::insufficient_signal, "no admissible direction");
    return out;
}

struct SandwichResult {
    double c1 = 0;
    double c2 = 0;
    bool pass = false;
    std::vector<FitPoint> points;
};

/// Envelope of vol(S cap exp(tu)S) * e^{rho_V(tu)}, rho_V(u) = 1/2 sum |u_i|.
/// Passes when the compensated series stays within a factor 1e3.
inline SandwichResult sandwich_check(const Shape& shape, std::span<const double> exponents,
                                     std::span<const double> t_grid, const MCConfig& cfg)
{
    if (exponents.size() != shape.dim) fail(Errc::dimension_mismatch, "exponents and shape differ in dimension");
    double rho = 0;
    for (double x : exponents) rho += std::abs(x);
    rho /= 2;
    SandwichResult out;
    bool any = false;
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        MCConfig c = cfg;
        c.seed = grid_seed(cfg.seed, i);
        auto r = mc_overlap(shape, diagonal_flow(exponents, t_grid[i]), c);
        FitPoint p{t_grid[i], r.estimate, r.std_err, r.estimate > 10 * r.std_err && r.estimate > 0};
        if (p.used) {
            double comp = r.estimate * std::exp(rho * std::abs(t_grid[i]));
            out.c1 = any ? std::min(out.c1, comp) : comp;
            out.c2 = any ? std::max(out.c2, comp) : comp;
            any = true;
        }
        out.points.push_back(p);
    }
    if (!any) fail(Errc::insufficient_signal, "no grid point above the noise floor");
    out.pass = out.c2 / out.c1 < 1e3;
    return out;
}

} // namespace propact
