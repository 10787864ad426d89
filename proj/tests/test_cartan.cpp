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

#include <gtest/gtest.h>

#include <cmath>

#include "propact/acceptance.hpp"
#include "propact/cartan.hpp"
#include "support.hpp"

using namespace propact;

namespace {

std::vector<MatrixGroupSpec> small_specs()
{
    std::vector<MatrixGroupSpec> out;
    for (int n = 1; n <= 4; ++n) {
        out.push_back(MatrixGroupSpec::sl(n));
        out.push_back(MatrixGroupSpec::gl(n));
        out.push_back(MatrixGroupSpec::sp(n));
    }
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q + p <= 3; ++q) {
            if (p + q == 0) continue;
            out.push_back(MatrixGroupSpec::so(p, q));
            out.push_back(MatrixGroupSpec::su(p, q));
            out.push_back(MatrixGroupSpec::u(p, q));
        }
    return out;
}

std::size_t closed_form_dim(const MatrixGroupSpec& s)
{
    auto n = static_cast<std::size_t>(s.n), m = static_cast<std::size_t>(s.p + s.q);
    switch (s.family) {
    case GroupFamily::SL_R: return n * n - 1;
    case GroupFamily::GL_R: return n * n;
    case GroupFamily::Sp_R: return n * (2 * n + 1);
    case GroupFamily::SO: return m * (m - 1) / 2;
    case GroupFamily::SU: return m * m - 1;
    case GroupFamily::U: return m * m;
    }
    return 0;
}

bool is_symmetric(const QMatrix& m, int sign)
{
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != sign * m[j][i]) return false;
    return true;
}

DMatrix diag_exp(const std::vector<double>& h)
{
    DMatrix g(h.size(), std::vector<double>(h.size(), 0.0));
    for (std::size_t i = 0; i < h.size(); ++i) g[i][i] = std::exp(h[i]);
    return g;
}

} // namespace

TEST(LieAlgebra, BasisIsIndependentClosedAndCartanSplit)
{
    for (const auto& s : small_specs()) {
        auto b = lie_algebra_basis(s);
        const std::size_t cols = b.ambient_dim * b.ambient_dim;
        auto flat = flatten_all(b.basis);
        EXPECT_EQ(b.dim(), closed_form_dim(s)) << describe(s);
        EXPECT_EQ(rank(flat, cols), b.dim()) << describe(s);
        EXPECT_EQ(b.k_part.size() + b.p_part.size(), b.dim());
        for (auto i : b.k_part) EXPECT_TRUE(is_symmetric(b.basis[i], -1)) << describe(s);
        for (auto i : b.p_part) EXPECT_TRUE(is_symmetric(b.basis[i], 1)) << describe(s);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = i + 1; j < b.dim(); ++j) {
                QMatrix stack = flat;
                stack.push_back(flatten(commutator(b.basis[i], b.basis[j])));
                ASSERT_EQ(rank(stack, cols), b.dim()) << describe(s) << " bracket " << i << "," << j;
            }
    }
}

TEST(LieAlgebra, DimensionExamples)
{
    EXPECT_EQ(cartan_dims(MatrixGroupSpec::sl(2)), (CartanDims{1, 2}));
    EXPECT_EQ(cartan_dims(MatrixGroupSpec::so(2, 1)), (CartanDims{1, 2}));
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(cartan_dims(MatrixGroupSpec::so(2 * n, 2)).dim_p, static_cast<std::size_t>(4 * n));
    for (int n = 2; n <= 6; ++n)
        EXPECT_EQ(cartan_dims(MatrixGroupSpec::sl(n)).dim_p, static_cast<std::size_t>(n * (n + 1) / 2 - 1));
    EXPECT_EQ(cartan_dims(MatrixGroupSpec::u(2, 3)).dim_p, 12u);
    EXPECT_EQ(cartan_dims(MatrixGroupSpec::sp(3)).dim_p, 12u);
}

TEST(LieAlgebra, DimPMatchesDefiningEquationOracle)
{
    for (const auto& s : small_specs()) EXPECT_EQ(cartan_dims(s).dim_p, acceptance::oracle::dim_p(s)) << describe(s);
}

TEST(PairSignature, OrthogonalPairsAndIdentity)
{
    for (int p = 1; p <= 4; ++p)
        for (int q = 0; q <= 3; ++q) {
            if (p + q < 2) continue;
            auto h = lie_algebra_basis(MatrixGroupSpec::so(p - 1, q));
            std::vector<std::size_t> map;
            for (int i = 0; i < p + q - 1; ++i) map.push_back(static_cast<std::size_t>(i < p - 1 ? i : i + 1));
            auto sig = pair_signature(MatrixGroupSpec::so(p, q), embed_basis(h, map, static_cast<std::size_t>(p + q)));
            EXPECT_EQ(sig, (PairSignature{static_cast<std::size_t>(q), static_cast<std::size_t>(p - 1)}))
                << p << "," << q;
        }
    auto g = MatrixGroupSpec::su(2, 1);
    EXPECT_EQ(pair_signature(g, lie_algebra_basis(g)), (PairSignature{0, 0}));
}

TEST(PairSignature, RejectsNonSubalgebra)
{
    auto h = lie_algebra_basis(MatrixGroupSpec::sl(2));
    std::vector<std::size_t> map{0, 1};
    try {
        pair_signature(MatrixGroupSpec::so(2, 1), embed_basis(h, map, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_a_subalgebra);
    }
}

TEST(RealRank, ClosedFormAndBasisAgree)
{
    EXPECT_EQ(real_rank(MatrixGroupSpec::so(4, 1)), 1);
    EXPECT_EQ(real_rank(MatrixGroupSpec::sl(2)), 1);
    EXPECT_EQ(real_rank(MatrixGroupSpec::su(2, 2)), 2);
    EXPECT_EQ(real_rank_from_basis(lie_algebra_basis(MatrixGroupSpec::su(2, 2))), 2);
    for (const auto& s : small_specs()) EXPECT_EQ(real_rank_from_basis(lie_algebra_basis(s)), real_rank(s)) << describe(s);
}

TEST(CartanProjection, Examples)
{
    for (double x : cartan_projection_gl(identity(4))) EXPECT_EQ(x, 0.0);
    auto mu = cartan_projection_gl(diag_exp({-2, 2}));
    EXPECT_NEAR(mu[0], 2, 1e-12);
    EXPECT_NEAR(mu[1], -2, 1e-12);

    SequentialStream rng(31, 0);
    auto k1 = ref::householder_orthogonal(3, rng), k2 = ref::householder_orthogonal(3, rng);
    auto g = matmul(matmul(k1, diag_exp({1, -4, 3})), k2);
    auto m = cartan_projection_gl(g);
    EXPECT_NEAR(m[0], 3, 1e-9);
    EXPECT_NEAR(m[1], 1, 1e-9);
    EXPECT_NEAR(m[2], -4, 1e-9);
}

TEST(CartanProjection, BiInvarianceInverseAndDeterminant)
{
    SequentialStream rng(32, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(2, 5));
        DMatrix g(n, std::vector<double>(n));
        for (auto& row : g)
            for (auto& x : row) x = rng.normal();
        auto mu = cartan_projection_gl(g);
        EXPECT_TRUE(std::is_sorted(mu.rbegin(), mu.rend()));

        auto moved = cartan_projection_gl(
            matmul(matmul(ref::householder_orthogonal(n, rng), g), ref::householder_orthogonal(n, rng)));
        for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(moved[i], mu[i], 1e-9);

        auto inv = cartan_projection_gl(inverse(g));
        for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(inv[i], -mu[n - 1 - i], 1e-9);

        double sum = 0;
        for (double x : mu) sum += x;
        ASSERT_NEAR(sum, log_abs_det(g), 1e-9);
    }
}

TEST(CartanProjection, SingularInputIsRejected)
{
    try {
        cartan_projection_gl({{1, 2}, {2, 4}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::singular_matrix);
    }
    EXPECT_THROW(cartan_projection_gl({{1, 2}}), Error);
}
