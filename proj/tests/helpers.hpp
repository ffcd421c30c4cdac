#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "tgraded/io.hpp"
#include "tgraded/universal.hpp"

namespace tgraded::testing {

inline Scalar q(long n, long d = 1) { return Scalar(n, d); }

inline PiecePoint pt(std::initializer_list<Scalar> coords) { return Coords(coords); }

inline PiecePoint word(std::initializer_list<std::pair<int, Scalar>> letters) {
    Word w;
    for (const auto& [b, l] : letters) w.push_back({b, l});
    return w;
}

inline USegment seg(Scalar len, int piece, PiecePoint value, Label label = 0) {
    return {std::move(len), piece, std::move(value), label};
}

inline UPoint upoint(std::initializer_list<USegment> segs) { return UPoint{std::vector<USegment>(segs)}; }

inline PStep step(Scalar len, int piece, PiecePoint value) { return {std::move(len), piece, std::move(value)}; }

inline PGeodesic pgeo(std::initializer_list<PStep> steps) { return PGeodesic{std::vector<PStep>(steps)}; }

inline std::string show(const UPoint& f) { return io::canonical(io::to_json(f)); }
inline std::string show(const PGeodesic& g) { return io::canonical(io::to_json(g)); }
inline std::string show(const PiecePoint& x) { return io::canonical(io::to_json(x)); }

// Piece ids used throughout the unit tests.
inline constexpr int kTree = 0;
inline constexpr int kLine = 1;
inline constexpr int kPlane = 2;

inline Space test_space(std::optional<Label> capacity = std::nullopt) {
    return Space{PieceFamily({Piece::tree(kTree), Piece::line(kLine), Piece::l1(kPlane, 2)}), capacity};
}

}  // namespace tgraded::testing
