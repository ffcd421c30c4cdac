#include "tgraded/stretch.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace tgraded {

StretchContext::StretchContext(PieceFamily source, PieceFamily target, std::vector<BilipschitzMap> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    std::set<int> hit;
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const BilipschitzMap& m = maps_[i];
        const Piece& from = source_.at(m.source());
        const Piece& to = target_.at(m.target());
        if (from.kind != to.kind || from.dim != to.dim) {
            throw std::invalid_argument("map " + std::to_string(m.source()) + " -> " + std::to_string(m.target()) +
                                        " joins pieces of different shape");
        }
        if (m.kind() == MapKind::CoordinateScale && m.factors().size() != from.dim) {
            throw std::invalid_argument("coordinate scale factor count differs from the piece dimension");
        }
        if (m.kind() == MapKind::CoordinateScale && from.kind == PieceKind::Tree) {
            throw std::invalid_argument("coordinate scale cannot act on a tree piece");
        }
        if (!by_source_.emplace(m.source(), i).second) {
            throw std::invalid_argument("source piece " + std::to_string(m.source()) + " has two maps");
        }
        if (!hit.insert(m.target()).second) injective_ = false;
        k_ = max(k_, m.constant());
    }
    for (const Piece& p : source_.pieces()) {
        if (!by_source_.contains(p.id)) throw std::invalid_argument("source piece " + std::to_string(p.id) + " has no map");
    }
    for (const Piece& p : target_.pieces()) {
        if (!hit.contains(p.id)) throw std::invalid_argument("target piece " + std::to_string(p.id) + " is never hit");
    }
}

const BilipschitzMap& StretchContext::map_for(int source_piece) const {
    auto it = by_source_.find(source_piece);
    if (it == by_source_.end()) throw std::invalid_argument("no map for piece " + std::to_string(source_piece));
    return maps_[it->second];
}

PiecePoint StretchContext::map_value(const PStep& step) const {
    const BilipschitzMap& m = map_for(step.piece);
    return m.apply(source_.at(m.source()), target_.at(m.target()), step.value);
}

Scalar StretchContext::stretched_length(const PStep& step) const {
    const Piece& to = target_.at(map_for(step.piece).target());
    return piece_distance(to, basepoint(to), map_value(step));
}

Scalar stretch_function(const StretchContext& ctx, const PGeodesic& g, const Scalar& t) {
    const Scalar l = g.length();
    if (t.sign() < 0 || t > l) throw std::out_of_range("parameter " + t.str() + " outside [0, " + l.str() + "]");
    Scalar start(0), image(0);
    for (const PStep& step : g.steps) {
        const Scalar stretched = ctx.stretched_length(step);
        if (t < start + step.length) return image + (t - start) / step.length * stretched;
        start += step.length;
        image += stretched;
    }
    return image;
}

PGeodesic psi(const StretchContext& ctx, const PGeodesic& g) {
    PGeodesic out;
    out.steps.reserve(g.steps.size());
    for (const PStep& step : g.steps) {
        out.steps.push_back({ctx.stretched_length(step), ctx.map_for(step.piece).target(), ctx.map_value(step)});
    }
    return out;
}

UPoint psi_point(const StretchContext& ctx, const UPoint& f) {
    if (!ctx.injective()) throw std::invalid_argument("point-level stretch needs distinct target pieces per source piece");
    const PGeodesic image = psi(ctx, f.pgeodesic());
    UPoint out;
    out.segments.reserve(image.steps.size());
    for (std::size_t a = 0; a < image.steps.size(); ++a) {
        const PStep& s = image.steps[a];
        out.segments.push_back({s.length, s.piece, s.value, f.segments[a].label});
    }
    return out;
}

}  // namespace tgraded
