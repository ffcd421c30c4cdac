#pragma once

#include <set>
#include <vector>

#include "tgraded/pieces.hpp"

namespace tgraded {

// One interval [p_a, q_a) of a finite almost filling, with the piece it runs
// through and its exit point. The piece distance from the basepoint to
// `value` equals `length`.
struct PStep {
    Scalar length;
    int piece = 0;
    PiecePoint value;

    friend bool operator==(const PStep&, const PStep&) = default;
};

// A P-geodesic over a finite tiling of [0, l). The sequence of `piece` ids is
// the index selector.
struct PGeodesic {
    std::vector<PStep> steps;

    Scalar length() const;
    // Prefix sums: boundaries()[a] = p_a, boundaries().back() = l.
    std::vector<Scalar> boundaries() const;
    bool empty() const { return steps.empty(); }

    friend bool operator==(const PGeodesic&, const PGeodesic&) = default;
};

// Throws std::invalid_argument on a non-positive step length, a malformed
// value, or a step whose length disagrees with the distance to its value.
void validate_steps(const PieceFamily& family, const PGeodesic& g);

PGeodesic reverse(const PieceFamily& family, const PGeodesic& g);

// Steps lying in [x, y], shifted to start at 0. x and y must not fall
// strictly inside a step.
PGeodesic restrict_open(const PGeodesic& g, const Scalar& x, const Scalar& y);

// Truncation to [0, x]; a step straddling x is cut along its chosen geodesic.
PGeodesic restrict_closed(const PieceFamily& family, const PGeodesic& g, const Scalar& x);

bool same_pattern_until(const PGeodesic& g1, const PGeodesic& g2, const Scalar& x);
bool same_initial_pattern(const PGeodesic& g1, const PGeodesic& g2);

// No two consecutive steps both run through a designated tree piece.
bool is_admissible(const PGeodesic& g, const std::set<int>& tree_piece_ids);

}  // namespace tgraded
