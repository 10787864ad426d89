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

#include <atomic>
#include <cmath>

#include "propact/linalg.hpp"
#include "propact/lp.hpp"
#include "propact/parallel.hpp"
#include "propact/random.hpp"
#include "support.hpp"

using namespace propact;

TEST(Rational, ParseAndPrintRoundTrip)
{
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(to_string(parse_rational("+7")), "7");
    EXPECT_EQ(to_string(make_rational(10, -4)), "-5/2");
    for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "--1"}) {
        try {
            parse_rational(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::parse_error) << bad;
        }
    }
}

TEST(Rational, PrimitiveIsSignPreservingAndCoprime)
{
    QVector v{make_rational(1, 2), make_rational(-3, 4), Rational(0)};
    EXPECT_EQ(primitive(v), (ZVector{2, -3, 0}));
    EXPECT_EQ(primitive(ZVector{4, -6, 8}), (ZVector{2, -3, 4}));
}

TEST(Linalg, RankPlusNullityIsColumnCount)
{
    SequentialStream rng(11, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.integer(1, 5));
        std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
        QMatrix m;
        for (std::size_t i = 0; i < rows; ++i) m.push_back(ref::random_rational_vector(cols, rng, 2));
        if (trial % 3 == 0) m.push_back(m.front()); // force a dependency
        auto ns = nullspace(m, cols);
        EXPECT_EQ(rank(m, cols) + ns.size(), cols);
        for (const auto& z : ns)
            for (const auto& x : mat_vec(m, z)) EXPECT_EQ(sgn(x), 0);
    }
}

TEST(Linalg, IntegerRankMatchesRationalRank)
{
    SequentialStream rng(12, 0);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = static_cast<std::size_t>(rng.integer(1, 6));
        std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
        ZMatrix z(rows, ZVector(cols));
        QMatrix q(rows, QVector(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                z[i][j] = rng.integer(-2, 2);
                q[i][j] = Rational(static_cast<long>(z[i][j]));
            }
        EXPECT_EQ(integer_rank(z, cols), rank(q, cols));
    }
}

TEST(Linalg, InverseAndLogDet)
{
    DMatrix a{{2, 1, 0}, {0, 3, 1}, {1, 0, 1}};
    auto inv = inverse(a);
    auto prod = matmul(a, inv);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(prod[i][j], i == j ? 1.0 : 0.0, 1e-14);
    EXPECT_NEAR(lu_complete(a).log_abs_det, std::log(7.0), 1e-14);
}

TEST(Lp, FeasibleSolutionsSatisfyTheSystem)
{
    QMatrix a{{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(-1)}};
    QVector b{Rational(2), Rational(1)};
    auto z = find_nonnegative_solution(a, b);
    ASSERT_TRUE(z);
    for (const auto& x : *z) EXPECT_GE(sgn(x), 0);
    auto ax = mat_vec(a, *z);
    EXPECT_EQ(ax, b);
}

TEST(Lp, DetectsInfeasibility)
{
    // z1 + z2 = -1 has no nonnegative solution.
    QMatrix a{{Rational(1), Rational(1)}};
    EXPECT_FALSE(find_nonnegative_solution(a, {Rational(-1)}));
    // z1 - z2 = 1 and z2 - z1 = 1 are contradictory.
    QMatrix c{{Rational(1), Rational(-1)}, {Rational(-1), Rational(1)}};
    EXPECT_FALSE(find_nonnegative_solution(c, {Rational(1), Rational(1)}));
}

TEST(Philox, KnownAnswerVectors)
{
    using C = Philox4x32::Counter;
    EXPECT_EQ(Philox4x32::block({0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, StreamsAreAddressable)
{
    CounterStream a(42, 3), b(42, 3), other(42, 4);
    EXPECT_EQ(a.uniform_pair(1000, 2), b.uniform_pair(1000, 2));
    EXPECT_NE(a.uniform_pair(1000, 2), other.uniform_pair(1000, 2));
    double sum = 0;
    for (std::uint64_t i = 0; i < 20000; ++i) {
        auto u = a.uniform_pair(i, 0);
        ASSERT_GE(u[0], 0.0);
        ASSERT_LT(u[0], 1.0);
        sum += u[0] + u[1];
    }
    EXPECT_NEAR(sum / 40000.0, 0.5, 0.01);
}

TEST(Parallel, ChunksCoverRangeOnceForAnyThreadCount)
{
    for (unsigned threads : {1u, 2u, 8u}) {
        std::vector<std::atomic<int>> seen(1000);
        parallel_chunks(seen.size(), 37, threads, [&](std::size_t, std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) ++seen[i];
        });
        for (auto& s : seen) EXPECT_EQ(s.load(), 1);
    }
}

TEST(Parallel, WorkerExceptionsPropagate)
{
    EXPECT_THROW(parallel_chunks(10, 10, 4,
                                 [](std::size_t c, std::size_t, std::size_t) {
                                     if (c == 7) fail(Errc::invalid_argument, "boom");
                                 }),
                 Error);
}
