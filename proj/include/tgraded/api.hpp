#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tgraded/stretch.hpp"
#include "tgraded/universal.hpp"
#include "tgraded/verifier.hpp"

namespace tgraded::api {

using json = nlohmann::json;

// A piece family with capacity, named elements and P-geodesics, and an
// optional stretch context:
//   {"pieces":[...], "capacity":null|n, "points":{"f":{...}}, "classes":{"w":{...}},
//    "stretch":{"target":{"pieces":[...]}, "maps":[...]}}
struct Scene {
    Space space;
    std::map<std::string, UPoint> points;
    std::map<std::string, PGeodesic> classes;
    std::optional<json> stretch;
};

// Throws std::invalid_argument (or FamilyMismatch) when a binding is invalid.
Scene parse_scene(const json& j);

StretchContext parse_stretch(const json& j, const PieceFamily& source);
std::pair<graph::MetricGraph, graph::PieceCover> parse_graph(const json& j);
json to_json(const graph::Verdict& v);

// `ref` is a binding name or an inline element as JSON text.
UPoint resolve_point(const Scene& scene, const std::string& ref);
PGeodesic resolve_class(const Scene& scene, const std::string& ref);

json dist(const Scene& scene, const std::string& f, const std::string& g);
// With t: the point at parameter t. Without: length and separation data.
json geodesic(const Scene& scene, const std::string& f, const std::string& g, const std::optional<Scalar>& t);
json project(const Scene& scene, const std::string& r, const std::string& base, int piece, Label label);
json concat(const Scene& scene, const std::string& f, const std::string& g);
json restrict(const Scene& scene, const std::string& f, const Scalar& x);
// Uses `context` when given, else the scene's own stretch context.
json stretch(const Scene& scene, const std::string& f, const std::optional<json>& context);
json realize(const Scene& scene, const std::string& w, const std::vector<Label>& labels);
json verify_graph(const json& graph, std::size_t cap);

// Runs one suite (metric, geodesic, projections, stretch, realtree, realize,
// all) over the built-in scenarios, or over `scene` when given.
json check(const std::string& suite, const std::optional<Scene>& scene, std::optional<std::size_t> samples,
           std::uint64_t seed);

}  // namespace tgraded::api
