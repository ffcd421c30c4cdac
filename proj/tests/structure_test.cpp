#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tgraded/io.hpp"
#include "tgraded/sampling.hpp"

using namespace tgraded;
using namespace tgraded::testing;

namespace {

const Space kSpace = test_space();

USegment L(long len, long value, Label label = 0) { return seg(q(len), kLine, pt({q(value)}), label); }
USegment T(long len, int branch, Label label = 0) { return seg(q(len), kTree, word({{branch, q(len)}}), label); }

TEST(Structure, Membership) {
    const UPoint base = upoint({T(1, 1)});
    const PieceRef P{base, kLine, 2};
    EXPECT_TRUE(member(base, P));
    const UPoint one = concat(base, single(kSpace, pt({q(3)}), kLine, 2));
    EXPECT_TRUE(member(one, P));
    EXPECT_FALSE(member(concat(one, upoint({T(1, 2, 2)})), P));
    EXPECT_FALSE(member(concat(base, upoint({L(3, 3, 1)})), P));
    EXPECT_FALSE(member(UPoint{}, P));
}

TEST(Structure, EmbedAndCoords) {
    const PieceRef P{UPoint{}, kLine, 0};
    EXPECT_EQ(embed(kSpace, P, pt({q(2)})), upoint({L(2, 2)}));
    EXPECT_EQ(embed(kSpace, P, pt({q(0)})), UPoint{});
    EXPECT_EQ(coords(kSpace, P, embed(kSpace, P, pt({q(-3)}))), pt({q(-3)}));
    EXPECT_EQ(dist(kSpace, embed(kSpace, P, pt({q(2)})), embed(kSpace, P, pt({q(-3)}))), q(5));
    EXPECT_THROW(coords(kSpace, P, upoint({L(1, 1, 1)})), std::invalid_argument);
}

TEST(Structure, ProjectExamples) {
    const PieceRef P{UPoint{}, kLine, 0};
    EXPECT_EQ(project(kSpace, single(kSpace, pt({q(2)}), kLine, 1), P), UPoint{});
    const UPoint r = concat(single(kSpace, pt({q(2)}), kLine, 0), single(kSpace, word({{1, q(1)}}), kTree, 3));
    EXPECT_EQ(project(kSpace, r, P), upoint({L(2, 2)}));
    const UPoint m = upoint({L(1, -1)});
    EXPECT_EQ(project(kSpace, m, P), m);
}

TEST(Structure, IntersectionOfSiblingPieces) {
    const UPoint base = upoint({T(1, 1)});
    const auto both = intersection(PieceRef{base, kLine, 0}, PieceRef{base, kLine, 1});
    ASSERT_EQ(both.size(), 1u);
    EXPECT_EQ(both.front(), base);
    EXPECT_THROW(intersection(PieceRef{base, kLine, 0}, PieceRef{base, kLine, 0}), std::invalid_argument);
    // A piece through a member of another one meets it in that member.
    const UPoint inner = upoint({T(1, 1), L(2, 2)});
    const auto cross = intersection(PieceRef{base, kLine, 0}, PieceRef{inner, kTree, 0});
    ASSERT_EQ(cross.size(), 1u);
    EXPECT_EQ(cross.front(), inner);
    EXPECT_TRUE(intersection(PieceRef{upoint({T(1, 1)}), kLine, 0}, PieceRef{upoint({T(1, 2)}), kLine, 0}).empty());
}

// Intersections agree with a brute-force membership scan over the candidate
// points: the two bases, and every prefix of either base.
TEST(Structure, IntersectionMatchesMembershipScan) {
    for (const Space& space : {tree_scenario(), mixed_scenario()}) {
        Sampler s(space, 41);
        for (int i = 0; i < 300; ++i) {
            const UPoint f = s.point();
            const PieceRef P = sample_piece_ref(s, f);
            const PieceRef Q = sample_piece_ref(s, s.coin() ? f : s.near(f));
            if (P == Q) continue;
            std::vector<UPoint> scan;
            for (const PieceRef* R : {&P, &Q}) {
                for (std::size_t k = 0; k <= R->base.segments.size(); ++k) {
                    UPoint c{std::vector<USegment>(R->base.segments.begin(),
                                                   R->base.segments.begin() + static_cast<std::ptrdiff_t>(k))};
                    if (member(c, P) && member(c, Q) && std::find(scan.begin(), scan.end(), c) == scan.end()) {
                        scan.push_back(c);
                    }
                }
            }
            const auto got = intersection(P, Q);
            EXPECT_LE(got.size(), 1u);
            EXPECT_EQ(got.size(), scan.size()) << io::canonical(io::to_json(P)) << io::canonical(io::to_json(Q));
            if (!got.empty() && !scan.empty()) {
                EXPECT_EQ(got.front(), scan.front());
            }
        }
    }
}

TEST(Structure, ProjectionMatchesGeodesicScan) {
    for (const Space& space : {line_scenario(), tree_scenario(), mixed_scenario()}) {
        Sampler s(space, 42);
        for (int i = 0; i < 500; ++i) {
            const UPoint r = s.point();
            const PieceRef P = sample_piece_ref(s, s.coin() ? r : s.point());
            const auto scan = oracle::project_by_scan(space, r, P);
            EXPECT_FALSE(scan.interior_hit);
            EXPECT_EQ(show(project(space, r, P)), show(scan.first));
        }
    }
}

TEST(Structure, ProjectionIsNearest) {
    const Space space = mixed_scenario();
    Sampler s(space, 43);
    for (int i = 0; i < 300; ++i) {
        const UPoint r = s.point();
        const PieceRef P = sample_piece_ref(s, r);
        const UPoint p = project(space, r, P);
        EXPECT_TRUE(member(p, P));
        const Piece& piece = space.family.at(P.piece);
        for (int k = 0; k < 5; ++k) {
            const UPoint m = embed(space, P, s.piece_point(piece));
            if (m == p) continue;
            EXPECT_LT(dist(space, r, p), dist(space, r, m));
            EXPECT_EQ(dist(space, r, m), dist(space, r, p) + dist(space, p, m));
        }
    }
}

TEST(Structure, AxiomReportsAreClean) {
    for (const Space& space : {line_scenario(), tree_scenario(), mixed_scenario()}) {
        for (const AxiomReport& rep : check_axioms(space, 300, 44)) {
            EXPECT_GT(rep.samples, 0u) << rep.axiom;
            EXPECT_TRUE(rep.violations.empty()) << rep.axiom << ": " << rep.violations.front().dump();
        }
    }
}

}  // namespace
