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

#include "propact/cones.hpp"
#include "support.hpp"

using namespace propact;

namespace {

QVector qv(std::initializer_list<long> xs)
{
    QVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

RationalSubspace span_of(std::initializer_list<QVector> vs, std::size_t n) { return RationalSubspace::span(QMatrix(vs), n); }

RationalSubspace random_subspace(std::size_t n, SequentialStream& rng)
{
    std::size_t k = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n)));
    QMatrix gens;
    for (std::size_t i = 0; i < k; ++i) {
        QVector v(n);
        for (auto& x : v) x = Rational(rng.integer(-1, 1));
        gens.push_back(v);
    }
    return gens.empty() ? RationalSubspace(n) : RationalSubspace::span(gens, n);
}

ConeUnion union_of(std::vector<RationalSubspace> ss)
{
    std::vector<ConeMember> m(ss.begin(), ss.end());
    return ConeUnion(std::move(m));
}

} // namespace

TEST(Subspace, IntersectionExamples)
{
    EXPECT_TRUE(subspace_intersection(span_of({qv({1, 0})}, 2), span_of({qv({0, 1})}, 2)).is_zero());
    auto line = span_of({qv({1, 1, -2})}, 3);
    EXPECT_EQ(subspace_intersection(line, span_of({qv({1, 1, -2}), qv({1, -1, 0})}, 3)), line);
    EXPECT_TRUE(subspace_intersection(span_of({qv({1, 0, -1})}, 3), span_of({qv({0, 1, -1})}, 3)).is_zero());
}

TEST(Subspace, IntersectionDimensionMatchesRankFormula)
{
    SequentialStream rng(41, 0);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
        auto u = random_subspace(n, rng), v = random_subspace(n, rng);
        auto meet = subspace_intersection(u, v);
        EXPECT_EQ(meet.dim(), ref::meet_dim(u.basis(), v.basis(), n));
        EXPECT_TRUE(u.contains(meet));
        EXPECT_TRUE(v.contains(meet));
    }
}

TEST(Cones, IntersectionExamples)
{
    EXPECT_FALSE(cones_intersect_nontrivially(PolyCone::ray(qv({1, 0})), PolyCone::ray(qv({0, 1}))).nontrivial);

    auto quad = PolyCone::hull({qv({1, 0}), qv({0, 1})}, 2);
    auto r = cones_intersect_nontrivially(PolyCone::ray(qv({1, 1})), quad);
    ASSERT_TRUE(r.nontrivial);
    EXPECT_EQ(r.witness, (ZVector{1, 1}));
    EXPECT_TRUE(verify_intersection(PolyCone::ray(qv({1, 1})), quad, r));

    auto c = PolyCone::hull({qv({2, -1, -1}), qv({1, 1, -2})}, 3);
    auto d = PolyCone::ray(qv({1, 0, -1}));
    auto w = cones_intersect_nontrivially(c, d);
    ASSERT_TRUE(w.nontrivial);
    EXPECT_EQ(w.witness, (ZVector{1, 0, -1}));
    EXPECT_TRUE(verify_intersection(c, d, w));
}

TEST(Cones, OppositeRaysAndLines)
{
    EXPECT_FALSE(cones_intersect_nontrivially(PolyCone::ray(qv({1, 2})), PolyCone::ray(qv({-1, -2}))).nontrivial);
    auto line = PolyCone::from_subspace(span_of({qv({1, 2})}, 2));
    EXPECT_TRUE(cones_intersect_nontrivially(line, PolyCone::ray(qv({-1, -2}))).nontrivial);
}

TEST(Cones, WitnessesVerifyAndAgreeWithBruteForceOnRays)
{
    SequentialStream rng(42, 0);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
        auto random_gen = [&] {
            QVector v;
            do {
                v = QVector(n);
                for (auto& x : v) x = Rational(rng.integer(-2, 2));
            } while (is_zero(std::span<const Rational>(v)));
            return v;
        };
        QMatrix cg, dg;
        for (long k = rng.integer(1, 3); k > 0; --k) cg.push_back(random_gen());
        dg.push_back(random_gen());
        auto c = PolyCone::hull(cg, n), d = PolyCone::hull(dg, n);
        auto res = cones_intersect_nontrivially(c, d);
        auto rev = cones_intersect_nontrivially(d, c);
        EXPECT_EQ(res.nontrivial, rev.nontrivial);
        if (res.nontrivial) {
            EXPECT_TRUE(verify_intersection(c, d, res));
        }
        // A single ray meets C iff the ray direction is a nonnegative combination of C's generators.
        QMatrix a(n, QVector(cg.size()));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < cg.size(); ++j) a[i][j] = cg[j][i];
        EXPECT_EQ(res.nontrivial, find_nonnegative_solution(a, dg[0]).has_value());
    }
}

TEST(Unions, PitchforkSymmetricAndSimilarityEquivalence)
{
    SequentialStream rng(43, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3;
        auto make = [&] {
            std::vector<RationalSubspace> ss;
            for (long k = rng.integer(1, 2); k > 0; --k) ss.push_back(random_subspace(n, rng));
            return union_of(ss);
        };
        auto a = make(), b = make(), c = make();
        EXPECT_EQ(pitchfork_unions(a, b), pitchfork_unions(b, a));
        EXPECT_TRUE(similar_subspace_unions(a, a));
        EXPECT_EQ(similar_subspace_unions(a, b), similar_subspace_unions(b, a));
        if (similar_subspace_unions(a, b) && similar_subspace_unions(b, c)) {
            EXPECT_TRUE(similar_subspace_unions(a, c));
        }

        // a padded with a subspace of one of its members is similar to a
        auto members = a.members();
        const auto& first = std::get<RationalSubspace>(members.front());
        members.push_back(first.is_zero() ? first : RationalSubspace::span(QMatrix{first.basis().front()}, n));
        ConeUnion a2(members);
        ASSERT_TRUE(similar_subspace_unions(a, a2));
        EXPECT_EQ(pitchfork_unions(a, c), pitchfork_unions(a2, c));
        EXPECT_EQ(pitchfork_unions(a, b, 1), pitchfork_unions(a, b, 4));
    }
}

TEST(Unions, MixedMembersRejectedForSimilarity)
{
    ConeUnion cones({PolyCone::ray(qv({1, 0}))});
    ConeUnion subs({span_of({qv({1, 0})}, 2)});
    try {
        similar_subspace_unions(cones, subs);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::mixed_members);
    }
}

TEST(AsymptoticCone, Examples)
{
    std::vector<DVector> pts;
    for (int k = 1; k <= 100; ++k) pts.push_back({double(k), 0.0});
    auto cone = asymptotic_cone(pts, {10.0, 1e-3});
    ASSERT_EQ(cone.generators.size(), 1u);
    EXPECT_EQ(primitive(cone.generators[0]), (ZVector{1, 0}));

    std::vector<DVector> drift;
    for (int k = 1; k <= 10000; ++k) drift.push_back({double(k), std::log(double(k))});
    auto d = asymptotic_cone(drift, {std::nullopt, 1e-2});
    ASSERT_GE(d.generators.size(), 1u);
    for (const auto& g : d.generators) {
        EXPECT_GT(sgn(g[0]), 0);
        EXPECT_LT(std::abs(g[1].get_d() / g[0].get_d()), 2e-3);
    }

    try {
        asymptotic_cone({{0.1, 0.0}, {0.0, 0.2}}, {10.0, 1e-3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::empty_tail);
    }
}

TEST(Distance, Examples)
{
    auto xaxis = span_of({qv({1, 0})}, 2), yaxis = span_of({qv({0, 1})}, 2);
    std::vector<double> on{5.0, 0.0}, diag{1.0, 1.0}, p{3.0, 4.0};
    EXPECT_NEAR(distance_to_subspace_union(on, union_of({xaxis})), 0.0, 1e-15);
    EXPECT_NEAR(distance_to_subspace_union(diag, union_of({xaxis})), 1.0, 1e-15);
    EXPECT_NEAR(distance_to_subspace_union(p, union_of({xaxis, yaxis})), 3.0, 1e-15);
}
