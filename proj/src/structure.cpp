#include "tgraded/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "tgraded/io.hpp"

namespace tgraded {

bool member(const UPoint& g, const PieceRef& P) {
    if (g == P.base) return true;
    if (g.segments.size() != P.base.segments.size() + 1 || !leq(P.base, g)) return false;
    const USegment& last = g.segments.back();
    return last.piece == P.piece && last.label == P.label;
}

UPoint embed(const Space& space, const PieceRef& P, const PiecePoint& x) {
    const Piece& p = space.family.at(P.piece);
    check_point(p, x);
    if (is_basepoint(x)) return P.base;
    return concat(P.base, single(space, x, P.piece, P.label));
}

PiecePoint coords(const Space& space, const PieceRef& P, const UPoint& g) {
    if (!member(g, P)) throw std::invalid_argument("coords() of a point outside the piece");
    if (g == P.base) return basepoint(space.family.at(P.piece));
    return g.segments.back().value;
}

UPoint project(const Space& space, const UPoint& r, const PieceRef& P) {
    space.family.at(P.piece);
    for (const USegment& s : r.segments) space.family.at(s.piece);
    if (member(r, P)) return r;
    const std::size_t k = P.base.segments.size();
    if (r.segments.size() > k && leq(P.base, r)) {
        const USegment& next = r.segments[k];
        if (next.piece == P.piece && next.label == P.label) {
            UPoint out = P.base;
            out.segments.push_back(next);
            return out;
        }
    }
    return P.base;
}

std::vector<UPoint> intersection(const PieceRef& P, const PieceRef& Q) {
    if (P == Q) throw std::invalid_argument("intersection of a piece with itself");
    // A common point is either base, or the piece with the shorter base
    // reaches the longer base in one step.
    std::vector<UPoint> out;
    for (const UPoint* c : {&P.base, &Q.base}) {
        if (member(*c, P) && member(*c, Q) && std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
    }
    return out;
}

PieceRef sample_piece_ref(Sampler& sampler, const UPoint& near) {
    const auto& segs = near.segments;
    const std::size_t k = sampler.below(segs.size() + 1);
    PieceRef P;
    P.base.segments.assign(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(k));
    if (k < segs.size() && sampler.below(3) != 0) {
        P.piece = segs[k].piece;
        P.label = segs[k].label;
    } else {
        const USegment s = sampler.segment();
        P.piece = s.piece;
        P.label = s.label;
    }
    return P;
}

namespace {

using io::json;

json config(const UPoint& r, const PieceRef& P) { return json{{"point", io::to_json(r)}, {"piece", io::to_json(P)}}; }

UPoint random_member(Sampler& s, const PieceRef& P) {
    const Piece& p = s.space().family.at(P.piece);
    return embed(s.space(), P, s.piece_point(p));
}

}  // namespace

std::vector<AxiomReport> check_axioms(const Space& space, std::size_t n_samples, std::uint64_t seed) {
    Sampler s(space, seed);
    AxiomReport p1{"P'1", 0, {}};
    AxiomReport nearest{"nearest", 0, {}};
    AxiomReport p2{"P'2", 0, {}};
    AxiomReport claim{"claim", 0, {}};
    AxiomReport p3{"P3", 0, {}};
    AxiomReport t1{"T1", 0, {}};

    for (std::size_t i = 0; i < n_samples; ++i) {
        const UPoint r = s.point();
        const PieceRef P = sample_piece_ref(s, r);
        const UPoint m = random_member(s, P);
        ++p1.samples;
        if (project(space, m, P) != m) p1.violations.push_back(config(m, P));

        const UPoint pr = project(space, r, P);
        const UPoint other = random_member(s, P);
        ++nearest.samples;
        if (!member(pr, P) || dist(space, r, other) < dist(space, r, pr)) {
            json w = config(r, P);
            w["projection"] = io::to_json(pr);
            w["closer"] = io::to_json(other);
            nearest.violations.push_back(std::move(w));
        }
    }

    // Pairs with distinct projections; bounded attempts keep the loop finite.
    for (std::size_t attempts = 0; p2.samples < n_samples && attempts < 50 * n_samples; ++attempts) {
        const UPoint z1 = s.point();
        const PieceRef P = sample_piece_ref(s, z1);
        UPoint z2 = s.coin() ? concat(random_member(s, P), s.point(2)) : s.near(z1);
        const UPoint q1 = project(space, z1, P);
        const UPoint q2 = project(space, z2, P);
        if (q1 == q2) continue;
        ++p2.samples;
        ++claim.samples;
        const Scalar a = dist(space, z1, q1), b = dist(space, q1, q2), c = dist(space, q2, z2);
        const Scalar d = dist(space, z1, z2);
        if (d != a + b + c) {
            p2.violations.push_back(json{{"z1", io::to_json(z1)},
                                         {"z2", io::to_json(z2)},
                                         {"piece", io::to_json(P)},
                                         {"lhs", io::to_json(d)},
                                         {"rhs", io::to_json(a + b + c)}});
            continue;
        }
        const ExplicitGeodesic gamma(space, z1, z2);
        if (gamma.eval(a) != q1 || gamma.eval(a + b) != q2) {
            claim.violations.push_back(json{{"z1", io::to_json(z1)}, {"z2", io::to_json(z2)}, {"piece", io::to_json(P)}});
        }
    }

    const std::size_t n_pairs = std::max<std::size_t>(1, n_samples / 5);
    for (std::size_t attempts = 0; p3.samples < n_pairs && attempts < 50 * n_pairs; ++attempts) {
        const UPoint r = s.point();
        const PieceRef P = sample_piece_ref(s, r);
        PieceRef Q;
        switch (s.below(3)) {
            case 0: Q = sample_piece_ref(s, random_member(s, P)); break;
            case 1: Q = sample_piece_ref(s, s.near(r)); break;
            default: Q = sample_piece_ref(s, concat(random_member(s, P), s.point(2))); break;
        }
        if (P == Q) continue;
        ++p3.samples;
        ++t1.samples;
        const UPoint first = project(space, random_member(s, Q), P);
        for (int k = 0; k < 5; ++k) {
            const UPoint q = random_member(s, Q);
            if (project(space, q, P) != first) {
                p3.violations.push_back(json{{"P", io::to_json(P)}, {"Q", io::to_json(Q)}, {"point", io::to_json(q)}});
                break;
            }
        }
        const std::vector<UPoint> common = intersection(P, Q);
        bool ok = common.size() <= 1;
        for (int k = 0; k < 5 && ok; ++k) {
            const UPoint q = random_member(s, Q);
            if (member(q, P) && std::find(common.begin(), common.end(), q) == common.end()) ok = false;
        }
        if (!ok) t1.violations.push_back(json{{"P", io::to_json(P)}, {"Q", io::to_json(Q)}});
    }

    return {p1, nearest, p2, claim, p3, t1};
}

}  // namespace tgraded
