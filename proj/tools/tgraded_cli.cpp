// tgraded: command-line front end. All results are JSON on stdout,
// diagnostics go to stderr. Exit codes: 0 success, 1 check or verification
// failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tgraded/api.hpp"
#include "tgraded/errors.hpp"
#include "tgraded/io.hpp"

namespace {

using json = nlohmann::json;
using namespace tgraded;

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

std::vector<Label> parse_labels(const std::string& text) {
    std::vector<Label> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoull(item));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the universal tree-graded space"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string scene_path;
    std::uint64_t seed = 1;
    std::optional<std::size_t> samples;
    std::size_t cap = graph::kDefaultCap;
    app.add_option("--scene", scene_path, "Scene JSON file (piece family, capacity, named elements)");
    app.add_option("--seed", seed, "Seed for sampling commands")->capture_default_str();
    app.add_option("--samples", samples, "Sample count for check suites");
    app.add_option("--cap", cap, "Maximum number of geodesics enumerated per vertex pair")->capture_default_str();

    std::string a, b, base, file, suite, labels, t_text, x_text, context_path;
    int piece = 0;
    Label label = 0;

    auto* dist = app.add_subcommand("dist", "Distance between two elements");
    dist->add_option("f", a)->required();
    dist->add_option("g", b)->required();

    auto* geodesic = app.add_subcommand("geodesic", "Explicit geodesic between two elements");
    geodesic->add_option("f", a)->required();
    geodesic->add_option("g", b)->required();
    geodesic->add_option("--t", t_text, "Arc-length parameter; omit for a summary");

    auto* project = app.add_subcommand("project", "Projection onto the piece P(base, piece, label)");
    project->add_option("r", a)->required();
    project->add_option("--base", base, "Base element of the piece")->required();
    project->add_option("--piece", piece)->required();
    project->add_option("--label", label);

    auto* concat = app.add_subcommand("concat", "Concatenation f * g");
    concat->add_option("f", a)->required();
    concat->add_option("g", b)->required();

    auto* restrict = app.add_subcommand("restrict", "Restriction of f to [0, x)");
    restrict->add_option("f", a)->required();
    restrict->add_option("--x", x_text)->required();

    auto* stretch = app.add_subcommand("stretch", "Image of an element under a stretch context");
    stretch->add_option("f", a)->required();
    stretch->add_option("--context", context_path, "Stretch context JSON; defaults to the scene's");

    auto* check = app.add_subcommand("check", "Run a seeded invariant suite");
    check->add_option("suite", suite, "metric | geodesic | projections | stretch | realtree | realize | all")->required();

    auto* verify = app.add_subcommand("verify-graph", "Decide whether a finite graph with a piece cover is tree-graded");
    verify->add_option("file", file)->required();

    auto* realize = app.add_subcommand("realize", "Realize a P-geodesic class with distinct labels");
    realize->add_option("w", a)->required();
    realize->add_option("--labels", labels, "Comma-separated labels")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        std::optional<api::Scene> scene;
        if (!scene_path.empty()) scene = api::parse_scene(read_json(scene_path));
        auto need_scene = [&]() -> const api::Scene& {
            if (!scene) throw std::invalid_argument("this command needs --scene");
            return *scene;
        };

        json out;
        int status = 0;
        if (*dist) {
            out = api::dist(need_scene(), a, b);
        } else if (*geodesic) {
            std::optional<Scalar> t;
            if (!t_text.empty()) t = Scalar::parse(t_text);
            out = api::geodesic(need_scene(), a, b, t);
        } else if (*project) {
            out = api::project(need_scene(), a, base, piece, label);
        } else if (*concat) {
            out = api::concat(need_scene(), a, b);
        } else if (*restrict) {
            out = api::restrict(need_scene(), a, Scalar::parse(x_text));
        } else if (*stretch) {
            std::optional<json> ctx;
            if (!context_path.empty()) ctx = read_json(context_path);
            out = api::stretch(need_scene(), a, ctx);
        } else if (*check) {
            out = api::check(suite, scene, samples, seed);
            status = out.at("clean").get<bool>() ? 0 : 1;
        } else if (*verify) {
            out = api::verify_graph(read_json(file), cap);
            status = out.at("accepted").get<bool>() ? 0 : 1;
        } else if (*realize) {
            out = api::realize(need_scene(), a, parse_labels(labels));
            status = out.at("certified").get<bool>() ? 0 : 1;
        }
        std::cout << io::canonical(out) << '\n';
        return status;
    } catch (const FamilyMismatch& e) {
        std::cerr << "family mismatch: " << e.what() << '\n';
    } catch (const CapExceeded& e) {
        std::cerr << "geodesic cap exceeded: " << e.what() << '\n';
    } catch (const json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return 2;
}
