#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tgraded/sampling.hpp"
#include "tgraded/stretch.hpp"

using namespace tgraded;
using namespace tgraded::testing;

namespace {

const PieceFamily kLineOnly({Piece::line(kLine)});

StretchContext scale_ctx(const Scalar& lambda) {
    return StretchContext(kLineOnly, kLineOnly, {BilipschitzMap::scale(kLine, kLine, lambda)});
}

PStep L(long len, long value) { return step(q(len), kLine, pt({q(value)})); }

TEST(Stretch, StretchFunction) {
    const StretchContext id(kLineOnly, kLineOnly, {BilipschitzMap::identity(kLine, kLine)});
    const PGeodesic g = pgeo({L(2, 2), L(1, -1)});
    for (long k = 0; k <= 6; ++k) EXPECT_EQ(stretch_function(id, g, q(k, 2)), q(k, 2));
    const auto twice = scale_ctx(q(2));
    EXPECT_EQ(stretch_function(twice, pgeo({L(2, 2)}), q(1)), q(2));
    EXPECT_EQ(stretch_function(twice, pgeo({L(2, 2)}), q(0)), q(0));
    EXPECT_THROW(stretch_function(twice, pgeo({L(2, 2)}), q(3)), std::out_of_range);
}

TEST(Stretch, Psi) {
    const auto twice = scale_ctx(q(2));
    EXPECT_EQ(psi(twice, pgeo({L(2, 2)})), pgeo({L(4, 4)}));
    EXPECT_EQ(psi(twice, PGeodesic{}), PGeodesic{});
    const PieceFamily target({Piece::line(7)});
    const StretchContext rename(kLineOnly, target, {BilipschitzMap::identity(kLine, 7)});
    EXPECT_EQ(psi(rename, pgeo({L(2, 2)})), pgeo({step(q(2), 7, pt({q(2)}))}));
}

TEST(Stretch, PsiPoint) {
    const Space space{kLineOnly, std::nullopt};
    const auto twice = scale_ctx(q(2));
    EXPECT_EQ(psi_point(twice, UPoint{}), UPoint{});
    EXPECT_EQ(psi_point(twice, single(space, pt({q(2)}), kLine, 5)), single(space, pt({q(4)}), kLine, 5));
    Sampler s(space, 51);
    for (int i = 0; i < 100; ++i) {
        const UPoint f = s.point(), g = s.point();
        EXPECT_EQ(psi_point(twice, concat(f, g)), concat(psi_point(twice, f), psi_point(twice, g)));
    }
}

TEST(Stretch, ContextValidation) {
    const PieceFamily two({Piece::line(1), Piece::line(2)});
    EXPECT_THROW(StretchContext(two, two, {BilipschitzMap::identity(1, 1)}), std::invalid_argument);
    EXPECT_THROW(StretchContext(kLineOnly, kLineOnly, {BilipschitzMap::identity(kLine, 3)}), std::invalid_argument);
    const PieceFamily plane({Piece::l1(1, 2)});
    EXPECT_THROW(StretchContext(kLineOnly, plane, {BilipschitzMap::identity(kLine, 1)}), std::invalid_argument);
    const StretchContext glue(two, kLineOnly, {BilipschitzMap::identity(1, 1), BilipschitzMap::identity(2, 1)});
    EXPECT_FALSE(glue.injective());
    EXPECT_THROW(psi_point(glue, UPoint{}), std::invalid_argument);
}

TEST(Stretch, SampledBilipschitz) {
    const Space space = mixed_scenario();
    std::vector<BilipschitzMap> maps{BilipschitzMap::scale(0, 0, q(2, 3)), BilipschitzMap::scale(1, 1, q(3, 2)),
                                     BilipschitzMap::coordinate_scale(2, 2, {q(3, 2), q(2, 3)})};
    const StretchContext ctx(space.family, space.family, maps);
    ASSERT_EQ(ctx.k(), q(3, 2));
    Sampler s(space, 52);
    for (int i = 0; i < 300; ++i) {
        const PGeodesic g = s.pgeodesic();
        const Scalar t1 = s.fraction_of(g.length()), t2 = s.fraction_of(g.length());
        const Scalar ds = abs(stretch_function(ctx, g, t2) - stretch_function(ctx, g, t1));
        EXPECT_LE(abs(t2 - t1), ctx.k() * ds);
        EXPECT_LE(ds, ctx.k() * abs(t2 - t1));
        validate_steps(ctx.target(), psi(ctx, g));

        const UPoint f = s.point(), h = s.near(f);
        const Scalar d = dist(space, f, h), dd = dist(space, psi_point(ctx, f), psi_point(ctx, h));
        EXPECT_LE(d, ctx.k() * dd);
        EXPECT_LE(dd, ctx.k() * d);
    }
}

}  // namespace
