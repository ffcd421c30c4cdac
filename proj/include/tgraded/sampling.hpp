#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tgraded/universal.hpp"

namespace tgraded {

// Seeded generator of small elements over a family. Values are drawn from a
// coarse grid so that random pairs often share prefixes, pieces and labels,
// which is what exercises both distance cases. Draws use raw engine output
// only, so streams are identical across standard library implementations.
class Sampler {
public:
    Sampler(const Space& space, std::uint64_t seed, Label label_range = 2);

    std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n)
    bool coin() { return below(2) == 0; }
    Scalar grid_length();                  // in {1/2, 1, 3/2, 2}

    PiecePoint piece_point(const Piece& p);          // may be the basepoint
    PiecePoint nonbase_point(const Piece& p);
    USegment segment();
    USegment segment_in(int piece, Label label);

    UPoint point(std::size_t max_segments = 3);
    // A point derived from `f`: shares a random prefix, often continues in
    // the same piece with the same label, or truncates inside a segment.
    UPoint near(const UPoint& f);
    PGeodesic pgeodesic(std::size_t max_steps = 3);
    Scalar fraction_of(const Scalar& total);  // grid point in [0, total]

    const Space& space() const { return space_; }

private:
    Space space_;
    std::mt19937_64 rng_;
    Label label_range_;
};

// Built-in sampling scenarios.
Space line_scenario();
Space tree_scenario();
Space mixed_scenario();

}  // namespace tgraded
