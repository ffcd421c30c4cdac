#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tgraded/scalar.hpp"

namespace tgraded {

enum class PieceKind { Line, L1, Tree };

// One move of a tree word: travel `length` along branch `branch`. The branch
// -b walks back along b.
struct Letter {
    int branch = 0;
    Scalar length;

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Coords = std::vector<Scalar>;
using Word = std::vector<Letter>;

// A point of a piece: coordinates for Line / L1 pieces, a reduced word for
// tree pieces. The piece basepoint is the origin or the empty word.
using PiecePoint = std::variant<Coords, Word>;

// A homogeneous geodesic pointed metric space used as a building block.
struct Piece {
    int id = 0;
    PieceKind kind = PieceKind::Line;
    std::size_t dim = 1;  // coordinate count; 1 for Line, ignored for Tree

    static Piece line(int id) { return {id, PieceKind::Line, 1}; }
    static Piece l1(int id, std::size_t dim) { return {id, PieceKind::L1, dim}; }
    static Piece tree(int id) { return {id, PieceKind::Tree, 0}; }

    friend bool operator==(const Piece&, const Piece&) = default;
};

const char* kind_name(PieceKind kind);

PiecePoint basepoint(const Piece& p);

// Throws std::invalid_argument when `x` has the wrong shape for `p` or is an
// unreduced word.
void check_point(const Piece& p, const PiecePoint& x);
bool is_basepoint(const PiecePoint& x);

// Tree word algebra.
Word reduce(std::span<const Letter> word);
Word inverse(std::span<const Letter> word);
Word multiply(std::span<const Letter> a, std::span<const Letter> b);
Scalar word_length(std::span<const Letter> word);

Scalar piece_distance(const Piece& p, const PiecePoint& a, const PiecePoint& b);

// Point at arc length `t` on the fixed geodesic from `a` to `b`.
PiecePoint chosen_geodesic(const Piece& p, const PiecePoint& a, const PiecePoint& b, const Scalar& t);

// phi_x(y), where phi_x is the fixed isometry carrying x to the basepoint:
// translation by -x for coordinate pieces, left multiplication by x^-1 for trees.
PiecePoint recenter(const Piece& p, const PiecePoint& x, const PiecePoint& y);

// Ordered set of pieces, addressed by id.
class PieceFamily {
public:
    PieceFamily() = default;
    explicit PieceFamily(std::vector<Piece> pieces);

    const Piece& at(int id) const;  // throws FamilyMismatch
    const Piece* find(int id) const;
    const std::vector<Piece>& pieces() const { return pieces_; }
    std::vector<int> ids_of_kind(PieceKind kind) const;
    bool all_of_kind(PieceKind kind) const;

    friend bool operator==(const PieceFamily&, const PieceFamily&) = default;

private:
    std::vector<Piece> pieces_;
};

enum class MapKind { Identity, Scale, CoordinateScale };

// A basepoint-preserving bilipschitz map between two pieces of the same shape.
class BilipschitzMap {
public:
    static BilipschitzMap identity(int src, int dst);
    static BilipschitzMap scale(int src, int dst, Scalar lambda);
    static BilipschitzMap coordinate_scale(int src, int dst, std::vector<Scalar> lambdas);

    int source() const { return src_; }
    int target() const { return dst_; }
    MapKind kind() const { return kind_; }
    const std::vector<Scalar>& factors() const { return lambdas_; }

    // Smallest k >= 1 with d/k <= d(map a, map b) <= k d.
    const Scalar& constant() const { return k_; }

    // `from` is the source piece, `to` the target; shapes must agree.
    PiecePoint apply(const Piece& from, const Piece& to, const PiecePoint& x) const;

private:
    BilipschitzMap(int src, int dst, MapKind kind, std::vector<Scalar> lambdas);

    int src_ = 0;
    int dst_ = 0;
    MapKind kind_ = MapKind::Identity;
    std::vector<Scalar> lambdas_;
    Scalar k_{1};
};

}  // namespace tgraded
