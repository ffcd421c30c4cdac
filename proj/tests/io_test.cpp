#include <gtest/gtest.h>

#include "helpers.hpp"
#include "tgraded/api.hpp"
#include "tgraded/errors.hpp"
#include "tgraded/sampling.hpp"

using namespace tgraded;
using namespace tgraded::testing;
using nlohmann::json;

namespace {

TEST(Io, Scalars) {
    EXPECT_EQ(io::to_json(q(3, 6)), json("1/2"));
    EXPECT_EQ(io::scalar_from_json(json("4/2")), q(2));
    EXPECT_EQ(io::scalar_from_json(json(3)), q(3));
    EXPECT_THROW(io::scalar_from_json(json(0.5)), std::invalid_argument);
}

TEST(Io, PointShapes) {
    EXPECT_EQ(io::canonical(io::to_json(pt({q(1), q(-1, 2)}))), R"(["1/1","-1/2"])");
    EXPECT_EQ(io::canonical(io::to_json(word({{-2, q(1)}}))), R"([[-2,"1/1"]])");
    EXPECT_EQ(io::canonical(io::to_json(upoint({seg(q(2), kLine, pt({q(2)}), 1)}))),
              R"({"segments":[{"label":1,"len":"2/1","piece":1,"value":["2/1"]}]})");
}

TEST(Io, RoundTrips) {
    const Space space = test_space();
    EXPECT_EQ(io::family_from_json(io::to_json(space.family)), space.family);
    Sampler s(space, 71);
    for (int i = 0; i < 300; ++i) {
        const UPoint f = s.point();
        const std::string text = io::canonical(io::to_json(f));
        EXPECT_EQ(io::upoint_from_json(json::parse(text), space.family), f);
        const PGeodesic g = s.pgeodesic();
        EXPECT_EQ(io::pgeodesic_from_json(io::to_json(g), space.family), g);
        const PieceRef P = sample_piece_ref(s, f);
        EXPECT_EQ(io::piece_ref_from_json(io::to_json(P), space.family), P);
    }
}

TEST(Io, RejectsInvalidElements) {
    const PieceFamily fam = test_space().family;
    json scene = json::parse(R"({"pieces":[{"id":1,"kind":"line"}],"capacity":1,"points":{}})");
    scene["points"]["f"] = json::parse(R"({"segments":[{"label":0,"len":"2","piece":1,"value":["1"]}]})");
    EXPECT_THROW(api::parse_scene(scene), std::invalid_argument);
    scene["points"]["f"] = json::parse(R"({"segments":[{"label":1,"len":"1","piece":1,"value":["1"]}]})");
    EXPECT_THROW(api::parse_scene(scene), std::invalid_argument);
    const json unknown = json::parse(R"({"segments":[{"label":0,"len":"1","piece":9,"value":["1"]}]})");
    EXPECT_THROW(io::upoint_from_json(unknown, fam), FamilyMismatch);
}

json scene_json() {
    return json::parse(R"({
      "pieces": [{"id": 0, "kind": "line"}],
      "points": {
        "f": {"segments": [{"label": 0, "len": "2", "piece": 0, "value": ["2"]}]},
        "g": {"segments": [{"label": 0, "len": "3", "piece": 0, "value": ["-3"]}]}
      }
    })");
}

TEST(Api, DistAndGeodesic) {
    const auto scene = api::parse_scene(scene_json());
    EXPECT_EQ(api::dist(scene, "f", "g"), json("5/1"));
    EXPECT_EQ(api::dist(scene, "f", "f"), json("0/1"));
    const json mid = api::geodesic(scene, "f", "g", q(2));
    EXPECT_EQ(io::canonical(mid), R"({"segments":[]})");
    EXPECT_EQ(api::dist(scene, "f", R"({"segments":[]})"), json("2/1"));
    EXPECT_THROW(api::dist(scene, "f", "nope"), std::invalid_argument);
}

TEST(Api, FamilyMismatchIsReported) {
    const auto scene = api::parse_scene(scene_json());
    EXPECT_THROW(api::dist(scene, "f", R"({"segments":[{"label":0,"len":"1","piece":4,"value":["1"]}]})"),
                 FamilyMismatch);
}

TEST(Api, CheckIsDeterministic) {
    const auto a = io::canonical(api::check("metric", std::nullopt, 200, 3));
    const auto b = io::canonical(api::check("metric", std::nullopt, 200, 3));
    EXPECT_EQ(a, b);
    EXPECT_TRUE(json::parse(a).at("clean").get<bool>());
    const auto line = api::parse_scene(scene_json());
    EXPECT_THROW(api::check("realtree", line, 50, 3), std::invalid_argument);
}

TEST(Api, VerifyGraph) {
    const json bowtie = json::parse(R"({"n":5,"edges":[[0,1,"1"],[1,2,"1"],[2,0,"1"],[2,3,"1"],[3,4,"1"],[4,2,"1"]],
                                       "pieces":[[0,1,2],[2,3,4]]})");
    EXPECT_TRUE(api::verify_graph(bowtie, 100).at("accepted").get<bool>());
    const json square = json::parse(R"({"n":4,"edges":[[0,1,"1"],[1,2,"1"],[2,3,"1"],[3,0,"1"]],
                                       "pieces":[[0,1],[2,3]]})");
    const json v = api::verify_graph(square, 100);
    EXPECT_FALSE(v.at("accepted").get<bool>());
}

}  // namespace
