#include "tgraded/sampling.hpp"

namespace tgraded {

Sampler::Sampler(const Space& space, std::uint64_t seed, Label label_range)
    : space_(space), rng_(seed), label_range_(label_range) {
    if (space_.capacity) label_range_ = std::min<Label>(label_range_, *space_.capacity);
    if (label_range_ == 0) label_range_ = 1;
}

std::uint64_t Sampler::below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }

Scalar Sampler::grid_length() { return Scalar(static_cast<long>(below(4) + 1), 2); }

PiecePoint Sampler::piece_point(const Piece& p) {
    if (p.kind == PieceKind::Tree) {
        Word w;
        const std::size_t letters = below(3);
        for (std::size_t i = 0; i < letters; ++i) {
            const int b = static_cast<int>(below(3)) + 1;
            w.push_back({coin() ? b : -b, grid_length()});
        }
        return reduce(w);
    }
    Coords c(p.dim);
    for (Scalar& x : c) x = Scalar(static_cast<long>(below(9)) - 4, 2);
    return c;
}

PiecePoint Sampler::nonbase_point(const Piece& p) {
    for (;;) {
        PiecePoint x = piece_point(p);
        if (!is_basepoint(x)) return x;
    }
}

USegment Sampler::segment_in(int piece, Label label) {
    const Piece& p = space_.family.at(piece);
    PiecePoint x = nonbase_point(p);
    Scalar len = piece_distance(p, basepoint(p), x);
    return {std::move(len), piece, std::move(x), label};
}

USegment Sampler::segment() {
    const auto& pieces = space_.family.pieces();
    const Piece& p = pieces[below(pieces.size())];
    return segment_in(p.id, below(label_range_));
}

UPoint Sampler::point(std::size_t max_segments) {
    UPoint f;
    const std::size_t n = below(max_segments + 1);
    for (std::size_t i = 0; i < n; ++i) f.segments.push_back(segment());
    return f;
}

Scalar Sampler::fraction_of(const Scalar& total) {
    if (total.is_zero()) return total;
    const long steps = 8;
    return total * Scalar(static_cast<long>(below(steps + 1)), steps);
}

UPoint Sampler::near(const UPoint& f) {
    const std::size_t keep = below(f.segments.size() + 1);
    UPoint g;
    g.segments.assign(f.segments.begin(), f.segments.begin() + static_cast<std::ptrdiff_t>(keep));
    switch (below(4)) {
        case 0:
            // Continue in the same piece with the same label.
            if (keep < f.segments.size()) {
                const USegment& next = f.segments[keep];
                g.segments.push_back(segment_in(next.piece, next.label));
            }
            break;
        case 1:
            // Stop inside the next segment.
            if (keep < f.segments.size()) {
                const Scalar rho = f.rho();
                Scalar at = g.rho() + fraction_of(f.segments[keep].length);
                return urestrict(space_, f, min(at, rho));
            }
            break;
        case 2:
            // Same piece, different label.
            if (keep < f.segments.size()) {
                const USegment& next = f.segments[keep];
                g.segments.push_back(segment_in(next.piece, (next.label + 1) % label_range_));
            }
            break;
        default:
            break;
    }
    const std::size_t tail = below(3);
    for (std::size_t i = 0; i < tail; ++i) g.segments.push_back(segment());
    return g;
}

PGeodesic Sampler::pgeodesic(std::size_t max_steps) {
    PGeodesic g;
    const std::size_t n = below(max_steps + 1);
    for (std::size_t i = 0; i < n; ++i) {
        USegment s = segment();
        g.steps.push_back({std::move(s.length), s.piece, std::move(s.value)});
    }
    return g;
}

Space line_scenario() { return Space{PieceFamily({Piece::line(0)}), std::nullopt}; }

Space tree_scenario() { return Space{PieceFamily({Piece::tree(0), Piece::tree(1)}), std::nullopt}; }

Space mixed_scenario() {
    return Space{PieceFamily({Piece::tree(0), Piece::line(1), Piece::l1(2, 2)}), std::nullopt};
}

}  // namespace tgraded
