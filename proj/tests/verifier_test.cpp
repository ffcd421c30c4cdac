#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tgraded/errors.hpp"

using namespace tgraded;
using namespace tgraded::graph;

namespace {

struct Case {
    std::size_t n;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> pieces;
};

std::vector<Edge> unit(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> out;
    for (auto [a, b] : pairs) out.push_back({a, b, Scalar(1)});
    return out;
}

Case path3() { return {3, unit({{0, 1}, {1, 2}}), {{0, 1}, {1, 2}}}; }
Case square(std::vector<std::vector<Vertex>> pieces) {
    return {4, unit({{0, 1}, {1, 2}, {2, 3}, {3, 0}}), std::move(pieces)};
}
Case bowtie() { return {5, unit({{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}), {{0, 1, 2}, {2, 3, 4}}}; }
Case star() { return {4, unit({{0, 1}, {0, 2}, {0, 3}}), {{0, 1}, {0, 2}, {0, 3}}}; }

std::set<std::string> tags(const Verdict& v) {
    std::set<std::string> out;
    for (const auto& x : v.violations) out.insert(x.axiom);
    return out;
}

Verdict run(const Case& c) {
    const MetricGraph g(c.n, c.edges);
    return verify(g, PieceCover(g, c.pieces));
}

std::set<std::string> brute(const Case& c) { return oracle::brute_from(c.n, c.edges, c.pieces).failing_tags(); }

TEST(Verifier, AllGeodesics) {
    const Case p = path3();
    const MetricGraph g(p.n, p.edges);
    EXPECT_EQ(all_geodesics(g, 0, 2), (std::vector<Path>{{0, 1, 2}}));
    const Case sq = square({{0}, {1}, {2}, {3}});
    const MetricGraph h(sq.n, sq.edges);
    EXPECT_EQ(all_geodesics(h, 0, 2), (std::vector<Path>{{0, 1, 2}, {0, 3, 2}}));
    EXPECT_THROW(all_geodesics(h, 0, 2, 1), CapExceeded);
}

TEST(Verifier, GraphValidation) {
    EXPECT_THROW(MetricGraph(3, unit({{0, 1}})), std::invalid_argument);
    EXPECT_THROW(MetricGraph(2, {{0, 1, Scalar(0)}}), std::invalid_argument);
    EXPECT_THROW(MetricGraph(2, unit({{0, 2}})), std::invalid_argument);
    const MetricGraph g(2, unit({{0, 1}}));
    EXPECT_THROW(PieceCover(g, {{0}}), std::invalid_argument);
    EXPECT_THROW(PieceCover(g, {{0, 1}, {}}), std::invalid_argument);
}

TEST(Verifier, T1) {
    const Case b = bowtie();
    const MetricGraph g(b.n, b.edges);
    EXPECT_TRUE(check_T1(g, PieceCover(g, b.pieces)).accepted);
    const auto shared = check_T1(g, PieceCover(g, {{0, 1, 2}, {1, 2, 3, 4}}));
    ASSERT_FALSE(shared.accepted);
    EXPECT_EQ(shared.violations.front().vertices, (std::vector<Vertex>{1, 2}));
    EXPECT_TRUE(check_T1(g, PieceCover(g, {{0, 1, 2, 3, 4}})).accepted);
}

TEST(Verifier, ProjectionSystem) {
    const Case b = bowtie();
    const MetricGraph g(b.n, b.edges);
    EXPECT_TRUE(check_projection_system(g, PieceCover(g, b.pieces)).accepted);
    const Case sq = square({{0, 1}, {2, 3}});
    const MetricGraph h(sq.n, sq.edges);
    const auto opposite = check_projection_system(h, PieceCover(h, sq.pieces));
    EXPECT_FALSE(opposite.accepted);
    EXPECT_TRUE(tags(opposite).contains("P'2"));
    const MetricGraph p(3, unit({{0, 1}, {1, 2}}));
    const auto tie = check_projection_system(p, PieceCover(p, {{0, 2}, {1}}));
    EXPECT_TRUE(tags(tie).contains("projection-unique"));
}

TEST(Verifier, TransverseFree) {
    const Case tree{5, unit({{0, 1}, {1, 2}, {1, 3}, {3, 4}}), {{0, 1}, {1, 2}, {1, 3}, {3, 4}}};
    const MetricGraph t(tree.n, tree.edges);
    EXPECT_TRUE(check_transverse_free(t, PieceCover(t, tree.pieces)).accepted);
    const Case sq = square({{0}, {1}, {2}, {3}});
    const MetricGraph h(sq.n, sq.edges);
    const auto v = check_transverse_free(h, PieceCover(h, sq.pieces));
    EXPECT_FALSE(v.accepted);
    EXPECT_EQ(v.violations.front().axiom, "transverse-tripod");
    EXPECT_EQ(v.violations.front().paths.size(), 3u);
    const Case b = bowtie();
    const MetricGraph g(b.n, b.edges);
    EXPECT_TRUE(check_transverse_free(g, PieceCover(g, b.pieces)).accepted);
}

TEST(Verifier, UniqueTransverseGeodesic) {
    const Case p = path3();
    const MetricGraph g(p.n, p.edges);
    EXPECT_TRUE(check_unique_transverse_geodesic(g, PieceCover(g, {{0}, {1}, {2}})).accepted);
    const Case sq = square({{0}, {1}, {2}, {3}});
    const MetricGraph h(sq.n, sq.edges);
    const auto v = check_unique_transverse_geodesic(h, PieceCover(h, sq.pieces));
    ASSERT_FALSE(v.accepted);
    EXPECT_EQ(v.violations.front().vertices, (std::vector<Vertex>{0, 2}));
    const Case b = bowtie();
    const MetricGraph bg(b.n, b.edges);
    EXPECT_TRUE(check_unique_transverse_geodesic(bg, PieceCover(bg, b.pieces)).accepted);
}

TEST(Verifier, GoldenVerdicts) {
    EXPECT_TRUE(run(bowtie()).accepted);
    EXPECT_TRUE(run(star()).accepted);
    EXPECT_TRUE(run(path3()).accepted);
    const auto opposite = run(square({{0, 1}, {2, 3}}));
    EXPECT_FALSE(opposite.accepted);
    EXPECT_TRUE(tags(opposite).contains("P'2"));
    const auto singletons = run(square({{0}, {1}, {2}, {3}}));
    EXPECT_FALSE(singletons.accepted);
    EXPECT_TRUE(tags(singletons).contains("transverse-tripod"));
    for (const Case& c : {bowtie(), star(), path3(), square({{0, 1}, {2, 3}}), square({{0}, {1}, {2}, {3}})}) {
        EXPECT_EQ(tags(run(c)), brute(c));
    }
}

// Random small graphs and covers: the verdict tags agree with the brute-force
// oracle, enumerated paths are shortest, accepted pieces are convex.
TEST(Verifier, RandomCasesMatchBruteForce) {
    std::mt19937_64 rng(61);
    int accepted = 0;
    for (int trial = 0; trial < 150; ++trial) {
        Case c;
        c.n = 2 + rng() % 5;
        for (Vertex v = 1; v < c.n; ++v) c.edges.push_back({v, static_cast<Vertex>(rng() % v), Scalar(1 + rng() % 2)});
        const std::size_t extra = rng() % 3;
        for (std::size_t k = 0; k < extra; ++k) {
            const Vertex a = rng() % c.n, b = rng() % c.n;
            if (a != b) c.edges.push_back({a, b, Scalar(1 + rng() % 2)});
        }
        if (rng() % 2) {
            for (const Edge& e : c.edges) c.pieces.push_back({std::min(e.a, e.b), std::max(e.a, e.b)});
        } else {
            for (Vertex v = 0; v < c.n; ++v) c.pieces.push_back({v});
            const std::size_t big = rng() % 3;
            for (std::size_t k = 0; k < big; ++k) {
                std::vector<Vertex> p;
                for (Vertex v = 0; v < c.n; ++v) {
                    if (rng() % 2) p.push_back(v);
                }
                if (p.size() > 1) c.pieces.push_back(p);
            }
        }
        const MetricGraph g(c.n, c.edges);
        const PieceCover cover(g, c.pieces);
        const Verdict v = verify(g, cover);
        const auto b = oracle::brute_from(c.n, c.edges, cover.pieces());
        EXPECT_EQ(tags(v), b.failing_tags()) << "trial " << trial;
        for (Vertex x = 0; x < c.n; ++x) {
            for (Vertex y = 0; y < c.n; ++y) {
                const auto paths = all_geodesics(g, x, y);
                EXPECT_EQ(paths, b.shortest(x, y));
                for (const Path& p : paths) EXPECT_EQ(b.weight(p), g.d(x, y));
            }
        }
        if (v.accepted) {
            ++accepted;
            EXPECT_TRUE(check_convexity(g, cover).accepted);
        }
    }
    EXPECT_GT(accepted, 10);
}

// Dropping a piece named in a T1 witness removes that witness.
TEST(Verifier, MonotoneCertificates) {
    const Case b = bowtie();
    const MetricGraph g(b.n, b.edges);
    std::vector<std::vector<Vertex>> pieces{{0, 1, 2}, {1, 2, 3, 4}, {2, 3, 4}};
    const auto before = check_T1(g, PieceCover(g, pieces));
    ASSERT_FALSE(before.accepted);
    for (const auto& w : before.violations) {
        auto reduced = pieces;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(w.pieces.back()));
        const auto after = check_T1(g, PieceCover(g, reduced));
        for (const auto& x : after.violations) EXPECT_NE(x.vertices, w.vertices);
    }
}

}  // namespace
