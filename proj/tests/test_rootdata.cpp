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

#include "propact/rootdata.hpp"
#include "support.hpp"

using namespace propact;

namespace {

std::set<ZMatrix> as_matrices(const std::vector<WeylElement>& ws)
{
    std::set<ZMatrix> out;
    for (const auto& w : ws) out.insert(w.matrix());
    return out;
}

QVector qv(std::initializer_list<long> xs)
{
    QVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST(RootDatum, SmallExamples)
{
    auto a1 = build_root_datum(Family::A, 1);
    EXPECT_EQ(a1.roots.size(), 2u);
    EXPECT_EQ(a1.ambient_dim, 2u);
    EXPECT_EQ(a1.weyl_order(), 2u);

    auto a2 = build_root_datum(Family::A, 2);
    EXPECT_EQ(a2.roots.size(), 6u);
    EXPECT_EQ(a2.weyl_order(), 6u);

    auto b2 = build_root_datum(Family::B, 2);
    EXPECT_EQ(b2.roots.size(), 8u);
    EXPECT_EQ(b2.weyl_order(), 8u);
    std::set<ZVector> expected{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    EXPECT_EQ(std::set<ZVector>(b2.roots.begin(), b2.roots.end()), expected);
}

TEST(RootDatum, RootCountsPerFamily)
{
    for (int r = 1; r <= 5; ++r) {
        EXPECT_EQ(build_root_datum(Family::A, r).roots.size(), static_cast<std::size_t>(r * (r + 1)));
        EXPECT_EQ(build_root_datum(Family::B, r).roots.size(), static_cast<std::size_t>(2 * r * r));
        EXPECT_EQ(build_root_datum(Family::C, r).roots.size(), static_cast<std::size_t>(2 * r * r));
        EXPECT_EQ(build_root_datum(Family::BC, r).roots.size(), static_cast<std::size_t>(2 * r * r + 2 * r));
        if (r >= 2) {
            EXPECT_EQ(build_root_datum(Family::D, r).roots.size(), static_cast<std::size_t>(2 * r * (r - 1)));
        }
    }
}

TEST(RootDatum, RootsAreSignCoherentSimpleCombinations)
{
    for (auto fam : {Family::A, Family::B, Family::C, Family::D, Family::BC})
        for (int r = fam == Family::D ? 2 : 1; r <= 4; ++r) {
            auto d = build_root_datum(fam, r);
            const std::size_t k = d.simple_roots.size();
            for (const auto& root : d.roots) {
                QMatrix m(d.ambient_dim, QVector(k + 1));
                for (std::size_t i = 0; i < d.ambient_dim; ++i) {
                    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(static_cast<long>(d.simple_roots[j][i]));
                    m[i][k] = Rational(static_cast<long>(root[i]));
                }
                auto ns = nullspace(m, k + 1);
                ASSERT_EQ(ns.size(), 1u) << to_string(fam) << r;
                const auto& z = ns[0];
                ASSERT_NE(sgn(z[k]), 0);
                int pos = 0, neg = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    Rational c = -z[j] / z[k];
                    EXPECT_EQ(c.get_den(), 1);
                    pos += sgn(c) > 0;
                    neg += sgn(c) < 0;
                }
                EXPECT_TRUE(pos == 0 || neg == 0);
            }
        }
}

TEST(Weyl, EnumerationMatchesSignedPermutationOracle)
{
    struct Case { Family fam; int rank; char tag; };
    for (auto c : {Case{Family::A, 1, 'A'}, Case{Family::A, 2, 'A'}, Case{Family::A, 3, 'A'},
                   Case{Family::B, 2, 'B'}, Case{Family::B, 3, 'B'}, Case{Family::C, 3, 'B'},
                   Case{Family::D, 3, 'D'}, Case{Family::D, 4, 'D'}, Case{Family::BC, 2, 'B'}}) {
        auto d = build_root_datum(c.fam, c.rank);
        auto oracle = ref::signed_permutations(d.ambient_dim, c.tag);
        auto bfs = weyl_elements(d, d.weyl_order());
        EXPECT_EQ(bfs.size(), d.weyl_order());
        EXPECT_EQ(as_matrices(bfs), oracle);

        std::vector<WeylElement> unranked;
        for (auto w : WeylRange(d)) unranked.push_back(w);
        EXPECT_EQ(as_matrices(unranked), oracle);
        EXPECT_EQ(unranked.size(), oracle.size());
    }
}

TEST(Weyl, ClosedUnderProduct)
{
    auto d = build_root_datum(Family::B, 3);
    auto ws = weyl_elements(d, 48);
    auto set = as_matrices(ws);
    ASSERT_EQ(set.size(), 48u);
    for (const auto& a : ws) {
        EXPECT_TRUE(set.count((a * a.inverse()).matrix()));
        for (const auto& b : ws) ASSERT_TRUE(set.count((a * b).matrix()));
    }
}

TEST(Weyl, RangeWalkAgreesWithUnranking)
{
    auto d = build_root_datum(Family::D, 4);
    std::uint64_t seen = 0;
    for_each_weyl_in_range(d, 17, 150, [&](std::uint64_t idx, const WeylElement& w) {
        EXPECT_EQ(w.matrix(), d.weyl_element(idx).matrix());
        ++seen;
        return true;
    });
    EXPECT_EQ(seen, 133u);
}

TEST(Weyl, CapExceeded)
{
    auto d = build_root_datum(Family::A, 2);
    try {
        weyl_elements(d, 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::cap_exceeded);
    }
    EXPECT_EQ(weyl_elements(build_root_datum(Family::A, 1), 2).size(), 2u);
}

TEST(Dominant, Examples)
{
    auto a2 = build_root_datum(Family::A, 2);
    EXPECT_EQ(dominant_representative(a2, qv({-2, 0, 2})), qv({2, 0, -2}));
    auto b2 = build_root_datum(Family::B, 2);
    EXPECT_EQ(dominant_representative(b2, qv({-3, 1})), qv({3, 1}));
    EXPECT_EQ(dominant_representative(b2, qv({0, 0})), qv({0, 0}));
    auto d3 = build_root_datum(Family::D, 3);
    EXPECT_EQ(dominant_representative(d3, qv({-1, -2, -3})), qv({3, 2, -1}));
    EXPECT_EQ(dominant_representative(d3, qv({-1, -2, 3})), qv({3, 2, 1}));
    EXPECT_EQ(dominant_representative(d3, qv({-1, 2, 3})), qv({3, 2, -1}));
}

TEST(Dominant, WitnessedIdempotentAndChamberValued)
{
    SequentialStream rng(21, 0);
    for (auto fam : {Family::A, Family::B, Family::C, Family::D})
        for (int trial = 0; trial < 200; ++trial) {
            auto d = build_root_datum(fam, 3);
            auto v = ref::random_rational_vector(d.ambient_dim, rng);
            if (fam == Family::A) v = ref::trace_free(v);
            auto res = dominant_with_witness(d, v);
            EXPECT_EQ(res.witness.apply(v), res.vector);
            EXPECT_TRUE(ref::signed_permutations(d.ambient_dim, fam == Family::A ? 'A' : fam == Family::D ? 'D' : 'B')
                            .count(res.witness.matrix()));
            EXPECT_EQ(dominant_representative(d, res.vector), res.vector);
            for (const auto& s : d.simple_roots) EXPECT_GE(sgn(root_pairing(s, res.vector)), 0);
        }
}

TEST(RhoH, ExamplesAndInvariance)
{
    auto a1 = build_root_datum(Family::A, 1);
    EXPECT_EQ(rho_h(a1, qv({1, -1})), 2);
    EXPECT_EQ(rho_h(a1, qv({0, 0})), 0);
    auto a2 = build_root_datum(Family::A, 2);
    EXPECT_EQ(rho_h(a2, qv({1, 0, -1})), 4);

    SequentialStream rng(22, 0);
    for (auto fam : {Family::A, Family::B, Family::D}) {
        auto d = build_root_datum(fam, 3);
        auto ws = weyl_elements(d, d.weyl_order());
        for (int trial = 0; trial < 200; ++trial) {
            auto v = ref::random_rational_vector(d.ambient_dim, rng);
            // sum over i<j of |y_i - y_j| for type A, by hand
            if (fam == Family::A) {
                Rational s = 0;
                for (std::size_t i = 0; i < v.size(); ++i)
                    for (std::size_t j = i + 1; j < v.size(); ++j) s += abs(Rational(v[i] - v[j]));
                EXPECT_EQ(rho_h(d, v), s);
            }
            auto base = rho_h(d, v);
            for (const auto& w : ws) ASSERT_EQ(rho_h(d, w.apply(v)), base);
        }
    }
}
