#include "tgraded/api.hpp"

#include <stdexcept>

#include "tgraded/errors.hpp"
#include "tgraded/io.hpp"
#include "tgraded/sampling.hpp"
#include "tgraded/structure.hpp"
#include "tgraded/suites.hpp"

namespace tgraded::api {

Scene parse_scene(const json& j) {
    Scene scene;
    scene.space.family = io::family_from_json(j);
    if (j.contains("capacity") && !j["capacity"].is_null()) scene.space.capacity = j["capacity"].get<Label>();
    if (j.contains("points")) {
        for (const auto& [name, value] : j["points"].items()) {
            UPoint f = io::upoint_from_json(value, scene.space.family);
            require_valid(scene.space, f);
            scene.points.emplace(name, std::move(f));
        }
    }
    if (j.contains("classes")) {
        for (const auto& [name, value] : j["classes"].items()) {
            scene.classes.emplace(name, io::pgeodesic_from_json(value, scene.space.family));
        }
    }
    if (j.contains("stretch")) {
        parse_stretch(j["stretch"], scene.space.family);
        scene.stretch = j["stretch"];
    }
    return scene;
}

StretchContext parse_stretch(const json& j, const PieceFamily& source) {
    const PieceFamily target = j.contains("target") ? io::family_from_json(j["target"]) : source;
    std::vector<BilipschitzMap> maps;
    for (const json& m : j.at("maps")) {
        const int src = m.at("src").get<int>();
        const int dst = m.value("dst", src);
        const std::string kind = m.value("kind", std::string("identity"));
        if (kind == "identity") {
            maps.push_back(BilipschitzMap::identity(src, dst));
        } else if (kind == "scale") {
            maps.push_back(BilipschitzMap::scale(src, dst, io::scalar_from_json(m.at("lambda"))));
        } else if (kind == "coordinate_scale") {
            std::vector<Scalar> lambdas;
            for (const json& l : m.at("lambdas")) lambdas.push_back(io::scalar_from_json(l));
            maps.push_back(BilipschitzMap::coordinate_scale(src, dst, std::move(lambdas)));
        } else {
            throw std::invalid_argument("unknown map kind \"" + kind + "\"");
        }
    }
    return StretchContext(source, target, std::move(maps));
}

std::pair<graph::MetricGraph, graph::PieceCover> parse_graph(const json& j) {
    std::vector<graph::Edge> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge must be [a, b, weight]");
        edges.push_back({e[0].get<graph::Vertex>(), e[1].get<graph::Vertex>(), io::scalar_from_json(e[2])});
    }
    graph::MetricGraph g(j.at("n").get<std::size_t>(), std::move(edges));
    graph::PieceCover cover(g, j.at("pieces").get<std::vector<std::vector<graph::Vertex>>>());
    return {std::move(g), std::move(cover)};
}

json to_json(const graph::Verdict& v) {
    json violations = json::array();
    for (const auto& x : v.violations) {
        violations.push_back({{"axiom", x.axiom}, {"pieces", x.pieces}, {"vertices", x.vertices}, {"paths", x.paths}});
    }
    return json{{"accepted", v.accepted}, {"violations", std::move(violations)}};
}

UPoint resolve_point(const Scene& scene, const std::string& ref) {
    if (!ref.empty() && ref.front() == '{') {
        UPoint f = io::upoint_from_json(json::parse(ref), scene.space.family);
        require_valid(scene.space, f);
        return f;
    }
    auto it = scene.points.find(ref);
    if (it == scene.points.end()) throw std::invalid_argument("no point named \"" + ref + "\" in the scene");
    return it->second;
}

PGeodesic resolve_class(const Scene& scene, const std::string& ref) {
    if (!ref.empty() && ref.front() == '{') return io::pgeodesic_from_json(json::parse(ref), scene.space.family);
    auto it = scene.classes.find(ref);
    if (it == scene.classes.end()) throw std::invalid_argument("no P-geodesic named \"" + ref + "\" in the scene");
    return it->second;
}

json dist(const Scene& scene, const std::string& f, const std::string& g) {
    return io::to_json(tgraded::dist(scene.space, resolve_point(scene, f), resolve_point(scene, g)));
}

json geodesic(const Scene& scene, const std::string& f, const std::string& g, const std::optional<Scalar>& t) {
    const ExplicitGeodesic gamma(scene.space, resolve_point(scene, f), resolve_point(scene, g));
    if (t) return io::to_json(gamma.eval(*t));
    return json{{"length", io::to_json(gamma.length())},
                {"separation", io::to_json(gamma.separation())},
                {"descent_end", io::to_json(gamma.descent_end())},
                {"ascent_start", io::to_json(gamma.ascent_start())}};
}

json project(const Scene& scene, const std::string& r, const std::string& base, int piece, Label label) {
    const PieceRef P{resolve_point(scene, base), piece, label};
    if (scene.space.capacity && label >= *scene.space.capacity) throw std::invalid_argument("piece label exceeds capacity");
    return io::to_json(tgraded::project(scene.space, resolve_point(scene, r), P));
}

json concat(const Scene& scene, const std::string& f, const std::string& g) {
    return io::to_json(tgraded::concat(resolve_point(scene, f), resolve_point(scene, g)));
}

json restrict(const Scene& scene, const std::string& f, const Scalar& x) {
    return io::to_json(urestrict(scene.space, resolve_point(scene, f), x));
}

json stretch(const Scene& scene, const std::string& f, const std::optional<json>& context) {
    const json* ctx_json = context ? &*context : (scene.stretch ? &*scene.stretch : nullptr);
    if (ctx_json == nullptr) throw std::invalid_argument("no stretch context given and the scene has none");
    const StretchContext ctx = parse_stretch(*ctx_json, scene.space.family);
    return io::to_json(psi_point(ctx, resolve_point(scene, f)));
}

json realize(const Scene& scene, const std::string& w, const std::vector<Label>& labels) {
    const PGeodesic cls = resolve_class(scene, w);
    const auto points = realize_class(scene.space, cls, labels);
    const Scalar expected = Scalar(2) * cls.length();
    bool certified = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            certified = certified && tgraded::dist(scene.space, points[i], points[j]) == expected;
        }
    }
    json out = json::array();
    for (const UPoint& p : points) out.push_back(io::to_json(p));
    return json{{"points", std::move(out)}, {"pairwise_dist", io::to_json(expected)}, {"certified", certified}};
}

json verify_graph(const json& graph, std::size_t cap) {
    const auto [g, cover] = parse_graph(graph);
    return to_json(graph::verify(g, cover, cap));
}

namespace {

std::vector<std::pair<std::string, Space>> scenarios(const std::optional<Scene>& scene) {
    if (scene) return {{"scene", scene->space}};
    return {{"line", line_scenario()}, {"tree", tree_scenario()}, {"mixed", mixed_scenario()}};
}

}  // namespace

json check(const std::string& suite, const std::optional<Scene>& scene, std::optional<std::size_t> samples,
           std::uint64_t seed) {
    json reports = json::array();
    const bool all = suite == "all";
    bool known = all;
    if (all || suite == "metric") {
        known = true;
        for (const auto& [name, space] : scenarios(scene)) reports.push_back(suites::metric(space, name, samples.value_or(1000), seed));
    }
    if (all || suite == "geodesic") {
        known = true;
        for (const auto& [name, space] : scenarios(scene)) {
            reports.push_back(suites::geodesic(space, name, samples.value_or(300), 5, seed));
        }
    }
    if (all || suite == "projections") {
        known = true;
        for (const auto& [name, space] : scenarios(scene)) {
            reports.push_back(suites::projections(space, name, samples.value_or(500), seed));
        }
    }
    if (all || suite == "realtree") {
        known = true;
        if (scene) {
            reports.push_back(suites::realtree(scene->space, "scene", samples.value_or(500), seed));
        } else {
            reports.push_back(suites::realtree(tree_scenario(), "tree", samples.value_or(500), seed));
        }
    }
    if (all || suite == "stretch") {
        known = true;
        reports.push_back(suites::stretch(samples.value_or(500), samples.value_or(300), seed));
    }
    if (all || suite == "realize") {
        known = true;
        reports.push_back(suites::realize(samples.value_or(16)));
    }
    if (!known) throw std::invalid_argument("unknown suite \"" + suite + "\"");
    bool ok = true;
    for (const json& r : reports) ok = ok && suites::clean(r);
    return json{{"suite", suite}, {"clean", ok}, {"reports", std::move(reports)}};
}

}  // namespace tgraded::api
