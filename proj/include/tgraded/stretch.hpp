#pragma once

#include <map>
#include <vector>

#include "tgraded/universal.hpp"

namespace tgraded {

// Replacement of every source piece by a bilipschitz-equivalent target piece.
class StretchContext {
public:
    // Each source piece needs exactly one map and every target piece must be
    // hit. Throws std::invalid_argument otherwise.
    StretchContext(PieceFamily source, PieceFamily target, std::vector<BilipschitzMap> maps);

    const PieceFamily& source() const { return source_; }
    const PieceFamily& target() const { return target_; }
    const std::vector<BilipschitzMap>& maps() const { return maps_; }
    const BilipschitzMap& map_for(int source_piece) const;
    const Scalar& k() const { return k_; }
    // True when distinct source pieces go to distinct target pieces.
    bool injective() const { return injective_; }

    // Length of the stretched step, d(r_{i(j)}, f_j(value)).
    Scalar stretched_length(const PStep& step) const;
    PiecePoint map_value(const PStep& step) const;

private:
    PieceFamily source_;
    PieceFamily target_;
    std::vector<BilipschitzMap> maps_;
    std::map<int, std::size_t> by_source_;
    Scalar k_{1};
    bool injective_ = true;
};

// s_Gamma(t): piecewise linear, slope stretched/original on each step.
Scalar stretch_function(const StretchContext& ctx, const PGeodesic& g, const Scalar& t);

PGeodesic psi(const StretchContext& ctx, const PGeodesic& g);

// Segmentwise image of an element; labels are kept. Requires an injective
// context, otherwise distinct branches would be glued together.
UPoint psi_point(const StretchContext& ctx, const UPoint& f);

}  // namespace tgraded
