#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgraded/pgeodesic.hpp"

namespace tgraded {

using Label = std::uint64_t;

// One closed-open interval of an element: its P-geodesic step together with
// the constant label carried on it.
struct USegment {
    Scalar length;
    int piece = 0;
    PiecePoint value;
    Label label = 0;

    friend bool operator==(const USegment&, const USegment&) = default;
};

// A point of the universal tree-graded space. The empty segment list is the
// basepoint.
struct UPoint {
    std::vector<USegment> segments;

    Scalar rho() const;
    bool is_basepoint() const { return segments.empty(); }
    PGeodesic pgeodesic() const;

    friend bool operator==(const UPoint&, const UPoint&) = default;
};

// The piece family plus the uniform label capacity (nullopt means unbounded).
struct Space {
    PieceFamily family;
    std::optional<Label> capacity;
};

struct Violation {
    int condition = 0;  // index of the violated element condition (2, 3 or 6)
    std::size_t segment = 0;
    std::string message;
};

std::optional<Violation> validate(const Space& space, const UPoint& f);
// Throws FamilyMismatch for unknown pieces, std::invalid_argument otherwise.
void require_valid(const Space& space, const UPoint& f);

// The one-segment element reaching `x` in piece `piece`, labelled `label`.
UPoint single(const Space& space, const PiecePoint& x, int piece, Label label);
UPoint concat(const UPoint& f, const UPoint& g);

enum class SeparationCase { SamePiece, Split };

struct SeparationData {
    Scalar s;
    Scalar u;
    Scalar v;
    SeparationCase kind = SeparationCase::Split;
    std::size_t common = 0;  // number of shared leading segments
    // Only meaningful for SamePiece.
    int piece = 0;
    Label label = 0;
    PiecePoint f_value;
    PiecePoint g_value;
};

SeparationData separation(const UPoint& f, const UPoint& g);

Scalar dist(const Space& space, const UPoint& f, const UPoint& g);
// The same distance through (rho_f - u) + (rho_g - v) + d_P; equal to dist by
// construction, kept separate so the two forms can be compared.
Scalar dist_rewritten(const Space& space, const UPoint& f, const UPoint& g);

// f <= g iff f's segment list is a prefix of g's.
bool leq(const UPoint& f, const UPoint& g);

UPoint urestrict(const Space& space, const UPoint& f, const Scalar& x);

// Descend from f, cross the shared piece, ascend to g.
class ExplicitGeodesic {
public:
    ExplicitGeodesic(const Space& space, UPoint f, UPoint g);

    const Scalar& length() const { return length_; }
    const SeparationData& separation() const { return sep_; }
    const UPoint& source() const { return f_; }
    const UPoint& target() const { return g_; }

    UPoint eval(const Scalar& t) const;

    // Phase boundaries: end of the descent and start of the ascent.
    const Scalar& descent_end() const { return descent_; }
    Scalar ascent_start() const { return descent_ + traverse_; }

private:
    Space space_;
    UPoint f_;
    UPoint g_;
    SeparationData sep_;
    Scalar descent_;
    Scalar traverse_;
    Scalar length_;
};

// One element per label, each following `w` with that constant label.
std::vector<UPoint> realize_class(const Space& space, const PGeodesic& w, const std::vector<Label>& labels);

}  // namespace tgraded
