#include "tgraded/pgeodesic.hpp"

#include <stdexcept>
#include <string>

namespace tgraded {

Scalar PGeodesic::length() const {
    Scalar total(0);
    for (const PStep& s : steps) total += s.length;
    return total;
}

std::vector<Scalar> PGeodesic::boundaries() const {
    std::vector<Scalar> out;
    out.reserve(steps.size() + 1);
    Scalar at(0);
    out.push_back(at);
    for (const PStep& s : steps) {
        at += s.length;
        out.push_back(at);
    }
    return out;
}

void validate_steps(const PieceFamily& family, const PGeodesic& g) {
    for (std::size_t a = 0; a < g.steps.size(); ++a) {
        const PStep& s = g.steps[a];
        const Piece& p = family.at(s.piece);
        if (s.length.sign() <= 0) throw std::invalid_argument("step " + std::to_string(a) + " has non-positive length");
        check_point(p, s.value);
        if (piece_distance(p, basepoint(p), s.value) != s.length) {
            throw std::invalid_argument("step " + std::to_string(a) + " length differs from the distance to its value");
        }
    }
}

PGeodesic reverse(const PieceFamily& family, const PGeodesic& g) {
    PGeodesic out;
    out.steps.reserve(g.steps.size());
    for (auto it = g.steps.rbegin(); it != g.steps.rend(); ++it) {
        const Piece& p = family.at(it->piece);
        out.steps.push_back({it->length, it->piece, recenter(p, it->value, basepoint(p))});
    }
    return out;
}

PGeodesic restrict_open(const PGeodesic& g, const Scalar& x, const Scalar& y) {
    const auto bounds = g.boundaries();
    if (x.sign() < 0 || y < x || y > bounds.back()) {
        throw std::out_of_range("restriction range [" + x.str() + ", " + y.str() + "] outside [0, " +
                                bounds.back().str() + "]");
    }
    for (std::size_t a = 0; a < g.steps.size(); ++a) {
        for (const Scalar* e : {&x, &y}) {
            if (bounds[a] < *e && *e < bounds[a + 1]) {
                throw std::invalid_argument("restriction endpoint " + e->str() + " lies inside step " +
                                            std::to_string(a));
            }
        }
    }
    PGeodesic out;
    for (std::size_t a = 0; a < g.steps.size(); ++a) {
        if (bounds[a] >= x && bounds[a + 1] <= y) out.steps.push_back(g.steps[a]);
    }
    return out;
}

PGeodesic restrict_closed(const PieceFamily& family, const PGeodesic& g, const Scalar& x) {
    const auto bounds = g.boundaries();
    if (x.sign() < 0 || x > bounds.back()) {
        throw std::out_of_range("truncation point " + x.str() + " outside [0, " + bounds.back().str() + "]");
    }
    PGeodesic out;
    for (std::size_t a = 0; a < g.steps.size() && bounds[a] < x; ++a) {
        const PStep& s = g.steps[a];
        if (bounds[a + 1] <= x) {
            out.steps.push_back(s);
            continue;
        }
        const Piece& p = family.at(s.piece);
        const Scalar kept = x - bounds[a];
        out.steps.push_back({kept, s.piece, chosen_geodesic(p, basepoint(p), s.value, kept)});
    }
    return out;
}

bool same_pattern_until(const PGeodesic& g1, const PGeodesic& g2, const Scalar& x) {
    if (x.sign() <= 0) throw std::invalid_argument("pattern comparison needs x > 0");
    const auto b1 = g1.boundaries();
    const auto b2 = g2.boundaries();
    // Steps contained in [0, x] form a prefix of each tiling.
    std::size_t n1 = 0, n2 = 0;
    while (n1 < g1.steps.size() && b1[n1 + 1] <= x) ++n1;
    while (n2 < g2.steps.size() && b2[n2 + 1] <= x) ++n2;
    if (n1 != n2) return false;
    for (std::size_t a = 0; a < n1; ++a) {
        if (!(g1.steps[a] == g2.steps[a])) return false;
    }
    const bool straddles1 = n1 < g1.steps.size() && b1[n1] < x;
    if (!straddles1) return true;
    const bool straddles2 = n2 < g2.steps.size() && b2[n2] < x;
    return straddles2 && g1.steps[n1].piece == g2.steps[n2].piece;
}

bool same_initial_pattern(const PGeodesic& g1, const PGeodesic& g2) {
    if (g1.empty() || g2.empty()) throw std::invalid_argument("initial pattern of an empty P-geodesic");
    // For x below both first lengths the only surviving condition compares
    // the first index selectors; larger x cannot succeed unless they agree.
    return g1.steps.front().piece == g2.steps.front().piece;
}

bool is_admissible(const PGeodesic& g, const std::set<int>& tree_piece_ids) {
    for (std::size_t a = 1; a < g.steps.size(); ++a) {
        if (tree_piece_ids.contains(g.steps[a - 1].piece) && tree_piece_ids.contains(g.steps[a].piece)) return false;
    }
    return true;
}

}  // namespace tgraded
