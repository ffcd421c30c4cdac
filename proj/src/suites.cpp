#include "tgraded/suites.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tgraded/io.hpp"
#include "tgraded/sampling.hpp"
#include "tgraded/stretch.hpp"
#include "tgraded/structure.hpp"

namespace tgraded::suites {

namespace {

bool matches_case(int c, const SeparationData& p1, const SeparationData& p2, const SeparationData& p3) {
    const Scalar &s1 = p1.s, &u1 = p1.u;
    const Scalar &v2 = p2.v;
    const Scalar &s3 = p3.s, &u3 = p3.u, &v3 = p3.v;
    switch (c) {
        case 1: return u1 <= s3 && v2 <= s3;
        case 2: return s3 < u1 && u1 <= u3 && s1 < u1 && v2 <= v3;
        case 3: return s3 < u1 && u1 <= u3 && s1 == u1 && v2 <= v3;
        case 4: return u1 == u3 && u3 == s3 && v2 <= v3;
        case 5: return u1 > u3 && u3 > s3;
        case 6: return u1 > u3 && u3 == s3;
        default: return false;
    }
}

// Cases of the triangle-inequality argument whose hypotheses hold for the
// triple as (f, g, h) or mirrored as (h, g, f). The cases overlap, so a
// triple may fall into several; bit c is set for case c.
unsigned proof_cases(const UPoint& f, const UPoint& g, const UPoint& h) {
    const auto fg = separation(f, g), gh = separation(g, h), fh = separation(f, h);
    const auto hg = separation(h, g), gf = separation(g, f), hf = separation(h, f);
    unsigned bits = 0;
    for (int c = 1; c <= 6; ++c) {
        if (matches_case(c, fg, gh, fh) || matches_case(c, hg, gf, hf)) bits |= 1u << c;
    }
    return bits;
}

json pair_witness(const UPoint& f, const UPoint& g) { return json{{"f", io::to_json(f)}, {"g", io::to_json(g)}}; }

Scalar parameter(Sampler& s, const Scalar& total) {
    return total * Scalar(static_cast<long>(s.below(97)), 96);
}

json finish(json report, json violations) {
    report["violations"] = std::move(violations);
    return report;
}

}  // namespace

json metric(const Space& space, const std::string& scenario, std::size_t triples, std::uint64_t seed) {
    Sampler s(space, seed);
    json violations = json::array();
    std::size_t case_a = 0, case_b = 0, nested = 0, disjoint = 0, same_piece_checked = 0, transport_checked = 0;
    std::array<std::size_t, 7> cases{};

    auto check_pair = [&](const UPoint& f, const UPoint& g) {
        const Scalar d = dist(space, f, g);
        const SeparationData sep = separation(f, g);
        if (d != dist(space, g, f)) violations.push_back({{"check", "symmetry"}, {"pair", pair_witness(f, g)}});
        if ((d.is_zero()) != (f == g)) violations.push_back({{"check", "identity"}, {"pair", pair_witness(f, g)}});
        const Scalar upper = (f.rho() - sep.s) + (g.rho() - sep.s);
        const Scalar lower = (f.rho() - sep.u) + (g.rho() - sep.v);
        if (d < lower || d > upper) violations.push_back({{"check", "sandwich"}, {"pair", pair_witness(f, g)}});
        if (!(sep.s <= sep.u && sep.u <= f.rho() && sep.s <= sep.v && sep.v <= g.rho())) {
            violations.push_back({{"check", "separation-order"}, {"pair", pair_witness(f, g)}});
        }
        if (sep.kind == SeparationCase::SamePiece) {
            ++case_a;
            ++same_piece_checked;
            if (d != dist_rewritten(space, f, g)) violations.push_back({{"check", "case-a-forms"}, {"pair", pair_witness(f, g)}});
        } else {
            ++case_b;
        }
    };

    for (std::size_t i = 0; i < triples; ++i) {
        const UPoint f = s.point();
        const UPoint g = s.near(f);
        const UPoint h = s.near(s.coin() ? f : g);
        if (!dist(space, f, f).is_zero()) violations.push_back({{"check", "identity"}, {"pair", pair_witness(f, f)}});
        check_pair(f, g);
        check_pair(g, h);
        check_pair(f, h);

        const Scalar dfg = dist(space, f, g), dgh = dist(space, g, h), dfh = dist(space, f, h);
        if (dfh > dfg + dgh || dfg > dfh + dgh || dgh > dfg + dfh) {
            violations.push_back({{"check", "triangle"},
                                  {"f", io::to_json(f)},
                                  {"g", io::to_json(g)},
                                  {"h", io::to_json(h)}});
        }
        const Scalar s1 = separation(f, g).s, s2 = separation(g, h).s, s3 = separation(f, h).s;
        if (s1 == s2 && s2 == s3) {
            ++disjoint;
        } else {
            ++nested;
        }
        // if s(f,g) < s(g,h) then s(f,h) = s(f,g), in every labelling.
        const std::array<std::array<const UPoint*, 3>, 3> rotations{{{&f, &g, &h}, {&g, &h, &f}, {&h, &f, &g}}};
        for (const auto& r : rotations) {
            const Scalar a = separation(*r[0], *r[1]).s, b = separation(*r[1], *r[2]).s;
            if (a < b) {
                ++transport_checked;
                if (separation(*r[0], *r[2]).s != a) {
                    violations.push_back({{"check", "transport"},
                                          {"f", io::to_json(*r[0])},
                                          {"g", io::to_json(*r[1])},
                                          {"h", io::to_json(*r[2])}});
                }
            }
        }
        const unsigned bits = proof_cases(f, g, h);
        if (bits == 0) ++cases[0];
        for (std::size_t c = 1; c <= 6; ++c) cases[c] += (bits >> c) & 1u;
    }

    json proof = json::object();
    for (int c = 1; c <= 6; ++c) proof[std::to_string(c)] = cases[static_cast<std::size_t>(c)];
    proof["unclassified"] = cases[0];
    json report{{"suite", "metric"},
                {"scenario", scenario},
                {"seed", seed},
                {"samples", triples},
                {"strata",
                 {{"case_a_pairs", case_a},
                  {"case_b_pairs", case_b},
                  {"nested_triples", nested},
                  {"disjoint_triples", disjoint},
                  {"case_a_form_checks", same_piece_checked},
                  {"transport_checks", transport_checked},
                  {"proof_cases", proof}}}};
    return finish(std::move(report), std::move(violations));
}

json geodesic(const Space& space, const std::string& scenario, std::size_t pairs, std::size_t params_per_pair,
              std::uint64_t seed) {
    Sampler s(space, seed);
    json violations = json::array();
    std::size_t sub = 0, same_piece = 0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const UPoint f = s.point();
        UPoint g = s.coin() ? s.near(f) : s.point();
        while (g == f) g = s.near(f);
        const ExplicitGeodesic gamma(space, f, g);
        if (gamma.separation().kind == SeparationCase::SamePiece) ++same_piece;
        if (gamma.length() != dist(space, f, g)) {
            violations.push_back({{"check", "length"}, {"pair", pair_witness(f, g)}});
        }
        if (io::canonical(io::to_json(gamma.eval(Scalar(0)))) != io::canonical(io::to_json(f)) ||
            io::canonical(io::to_json(gamma.eval(gamma.length()))) != io::canonical(io::to_json(g))) {
            violations.push_back({{"check", "endpoints"}, {"pair", pair_witness(f, g)}});
        }
        for (std::size_t k = 0; k < params_per_pair; ++k) {
            Scalar a = parameter(s, gamma.length()), b = parameter(s, gamma.length());
            while (a == b) b = parameter(s, gamma.length());
            if (b < a) std::swap(a, b);
            ++sub;
            const UPoint pa = gamma.eval(a), pb = gamma.eval(b);
            if (validate(space, pa) || validate(space, pb) || dist(space, pa, pb) != b - a) {
                violations.push_back({{"check", "arc-length"},
                                      {"pair", pair_witness(f, g)},
                                      {"a", io::to_json(a)},
                                      {"b", io::to_json(b)}});
            }
        }
    }
    json report{{"suite", "geodesic"},
                {"scenario", scenario},
                {"seed", seed},
                {"samples", pairs},
                {"strata", {{"same_piece_pairs", same_piece}, {"parameter_pairs", sub}}}};
    return finish(std::move(report), std::move(violations));
}

json projections(const Space& space, const std::string& scenario, std::size_t samples, std::uint64_t seed) {
    json axioms = json::array();
    json violations = json::array();
    for (const AxiomReport& r : check_axioms(space, samples, seed)) {
        axioms.push_back(io::to_json(r));
        for (const json& v : r.violations) violations.push_back({{"axiom", r.axiom}, {"witness", v}});
    }
    json report{{"suite", "projections"}, {"scenario", scenario}, {"seed", seed}, {"samples", samples}, {"axioms", axioms}};
    return finish(std::move(report), std::move(violations));
}

json realtree(const Space& space, const std::string& scenario, std::size_t quadruples, std::uint64_t seed) {
    if (!space.family.all_of_kind(PieceKind::Tree)) {
        throw std::invalid_argument("realtree suite needs a family made only of tree pieces");
    }
    Sampler s(space, seed);
    json violations = json::array();
    for (std::size_t i = 0; i < quadruples; ++i) {
        std::array<UPoint, 4> q;
        q[0] = s.point();
        for (std::size_t k = 1; k < 4; ++k) q[k] = s.coin() ? s.near(q[s.below(k)]) : s.point();
        std::array<Scalar, 3> sums{dist(space, q[0], q[1]) + dist(space, q[2], q[3]),
                                   dist(space, q[0], q[2]) + dist(space, q[1], q[3]),
                                   dist(space, q[0], q[3]) + dist(space, q[1], q[2])};
        std::sort(sums.begin(), sums.end());
        if (sums[1] != sums[2]) {
            json w = json::array();
            for (const UPoint& p : q) w.push_back(io::to_json(p));
            violations.push_back({{"check", "four-point"}, {"points", w}});
        }
    }
    json report{{"suite", "realtree"}, {"scenario", scenario}, {"seed", seed}, {"samples", quadruples}};
    return finish(std::move(report), std::move(violations));
}

json stretch(std::size_t param_pairs, std::size_t point_pairs, std::uint64_t seed) {
    const Space space = mixed_scenario();
    const PieceFamily& fam = space.family;
    const Scalar three_halves(3, 2), two_thirds(2, 3);
    const std::vector<std::pair<std::string, StretchContext>> contexts{
        {"scale",
         StretchContext(fam, fam,
                        {BilipschitzMap::scale(0, 0, three_halves), BilipschitzMap::scale(1, 1, three_halves),
                         BilipschitzMap::scale(2, 2, three_halves)})},
        {"mixed",
         StretchContext(fam, fam,
                        {BilipschitzMap::scale(0, 0, two_thirds), BilipschitzMap::scale(1, 1, three_halves),
                         BilipschitzMap::coordinate_scale(2, 2, {three_halves, two_thirds})})},
    };
    const StretchContext identity(fam, fam,
                                  {BilipschitzMap::identity(0, 0), BilipschitzMap::identity(1, 1),
                                   BilipschitzMap::identity(2, 2)});

    Sampler s(space, seed);
    json violations = json::array();
    json runs = json::array();
    for (const auto& [name, ctx] : contexts) {
        const Scalar& k = ctx.k();
        std::size_t checked = 0;
        for (std::size_t attempts = 0; checked < param_pairs && attempts < 20 * param_pairs; ++attempts) {
            const PGeodesic g = s.pgeodesic();
            if (g.empty()) continue;
            const Scalar l = g.length();
            Scalar a = parameter(s, l), b = parameter(s, l);
            if (a == b) continue;
            if (b < a) std::swap(a, b);
            ++checked;
            const Scalar ds = stretch_function(ctx, g, b) - stretch_function(ctx, g, a);
            if (ds * k < b - a || ds > k * (b - a)) {
                violations.push_back({{"check", "s-bilipschitz"}, {"context", name}, {"geodesic", io::to_json(g)},
                                      {"a", io::to_json(a)}, {"b", io::to_json(b)}});
            }
        }
        for (std::size_t i = 0; i < point_pairs; ++i) {
            const UPoint f = s.point();
            const UPoint g = s.coin() ? s.near(f) : s.point();
            const Scalar d = dist(space, f, g);
            const Scalar dpsi = dist(space, psi_point(ctx, f), psi_point(ctx, g));
            if (dpsi * k < d || dpsi > k * d) {
                violations.push_back({{"check", "psi-bilipschitz"}, {"context", name}, {"pair", pair_witness(f, g)}});
            }
            const PGeodesic pf = f.pgeodesic(), pg = g.pgeodesic();
            if (!pf.empty() && !pg.empty() && same_initial_pattern(pf, pg) &&
                !same_initial_pattern(psi(ctx, pf), psi(ctx, pg))) {
                violations.push_back({{"check", "pattern"}, {"context", name}, {"pair", pair_witness(f, g)}});
            }
        }
        runs.push_back({{"context", name}, {"k", io::to_json(k)}, {"parameter_pairs", checked}, {"point_pairs", point_pairs}});
    }
    for (std::size_t i = 0; i < point_pairs; ++i) {
        const UPoint f = s.point();
        const UPoint g = s.near(f);
        if (dist(space, psi_point(identity, f), psi_point(identity, g)) != dist(space, f, g)) {
            violations.push_back({{"check", "identity-isometry"}, {"pair", pair_witness(f, g)}});
        }
    }
    runs.push_back({{"context", "identity"}, {"k", "1/1"}, {"point_pairs", point_pairs}});
    json report{{"suite", "stretch"}, {"scenario", "mixed"}, {"seed", seed}, {"runs", runs}};
    return finish(std::move(report), std::move(violations));
}

json realize(std::size_t labels) {
    const Space space = mixed_scenario();
    PGeodesic w;
    w.steps.push_back({Scalar(1), 0, Word{{1, Scalar(1)}}});
    w.steps.push_back({Scalar(2), 1, Coords{Scalar(2)}});
    w.steps.push_back({Scalar(3, 2), 2, Coords{Scalar(1), Scalar(-1, 2)}});
    std::vector<Label> ls(labels);
    for (std::size_t i = 0; i < labels; ++i) ls[i] = i;
    const auto points = realize_class(space, w, ls);
    const Scalar expected = Scalar(2) * w.length();
    json violations = json::array();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            ++pairs;
            const Scalar d = dist(space, points[i], points[j]);
            if (d != expected) {
                violations.push_back({{"labels", {i, j}}, {"dist", io::to_json(d)}});
            }
        }
    }
    json report{{"suite", "realize"},
                {"class", io::to_json(w)},
                {"labels", labels},
                {"pairs", pairs},
                {"expected_dist", io::to_json(expected)}};
    return finish(std::move(report), std::move(violations));
}

bool clean(const json& report) { return report.at("violations").empty(); }

}  // namespace tgraded::suites
