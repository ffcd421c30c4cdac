#include "tgraded/universal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tgraded/errors.hpp"

namespace tgraded {

Scalar UPoint::rho() const {
    Scalar total(0);
    for (const USegment& s : segments) total += s.length;
    return total;
}

PGeodesic UPoint::pgeodesic() const {
    PGeodesic g;
    g.steps.reserve(segments.size());
    for (const USegment& s : segments) g.steps.push_back({s.length, s.piece, s.value});
    return g;
}

std::optional<Violation> validate(const Space& space, const UPoint& f) {
    for (std::size_t a = 0; a < f.segments.size(); ++a) {
        const USegment& seg = f.segments[a];
        if (seg.length.sign() <= 0) return Violation{2, a, "segment length must be positive"};
        const Piece* p = space.family.find(seg.piece);
        if (p == nullptr) return Violation{3, a, "piece " + std::to_string(seg.piece) + " is not in the family"};
        try {
            check_point(*p, seg.value);
        } catch (const std::invalid_argument& e) {
            return Violation{3, a, e.what()};
        }
        const Scalar d = piece_distance(*p, basepoint(*p), seg.value);
        if (d != seg.length) {
            return Violation{3, a, "distance from the basepoint is " + d.str() + ", segment length is " + seg.length.str()};
        }
        if (space.capacity && seg.label >= *space.capacity) {
            return Violation{6, a, "label " + std::to_string(seg.label) + " is not below the capacity " +
                                       std::to_string(*space.capacity)};
        }
    }
    return std::nullopt;
}

void require_valid(const Space& space, const UPoint& f) {
    if (auto v = validate(space, f)) {
        const std::string what = "invalid element (condition " + std::to_string(v->condition) + ", segment " +
                                 std::to_string(v->segment) + "): " + v->message;
        if (v->condition == 3 && space.family.find(f.segments[v->segment].piece) == nullptr) throw FamilyMismatch(what);
        throw std::invalid_argument(what);
    }
}

UPoint single(const Space& space, const PiecePoint& x, int piece, Label label) {
    const Piece& p = space.family.at(piece);
    check_point(p, x);
    if (is_basepoint(x)) throw std::invalid_argument("single() at the piece basepoint has zero length");
    UPoint f{{USegment{piece_distance(p, basepoint(p), x), piece, x, label}}};
    require_valid(space, f);
    return f;
}

UPoint concat(const UPoint& f, const UPoint& g) {
    UPoint out = f;
    out.segments.insert(out.segments.end(), g.segments.begin(), g.segments.end());
    return out;
}

SeparationData separation(const UPoint& f, const UPoint& g) {
    SeparationData sep;
    sep.s = Scalar(0);
    std::size_t k = 0;
    const std::size_t n = std::min(f.segments.size(), g.segments.size());
    while (k < n && f.segments[k] == g.segments[k]) {
        sep.s += f.segments[k].length;
        ++k;
    }
    sep.common = k;
    if (k < f.segments.size() && k < g.segments.size() && f.segments[k].piece == g.segments[k].piece &&
        f.segments[k].label == g.segments[k].label) {
        sep.kind = SeparationCase::SamePiece;
        sep.piece = f.segments[k].piece;
        sep.label = f.segments[k].label;
        sep.f_value = f.segments[k].value;
        sep.g_value = g.segments[k].value;
        sep.u = sep.s + f.segments[k].length;
        sep.v = sep.s + g.segments[k].length;
    } else {
        sep.kind = SeparationCase::Split;
        sep.u = sep.s;
        sep.v = sep.s;
    }
    return sep;
}

namespace {

void require_family(const Space& space, const UPoint& f) {
    for (const USegment& s : f.segments) space.family.at(s.piece);
}

}  // namespace

Scalar dist(const Space& space, const UPoint& f, const UPoint& g) {
    require_family(space, f);
    require_family(space, g);
    const SeparationData sep = separation(f, g);
    const Scalar spread = (f.rho() - sep.s) + (g.rho() - sep.s);
    if (sep.kind == SeparationCase::Split) return spread;
    const Piece& p = space.family.at(sep.piece);
    return spread + piece_distance(p, sep.f_value, sep.g_value) - (sep.u - sep.s) - (sep.v - sep.s);
}

Scalar dist_rewritten(const Space& space, const UPoint& f, const UPoint& g) {
    require_family(space, f);
    require_family(space, g);
    const SeparationData sep = separation(f, g);
    Scalar d = (f.rho() - sep.u) + (g.rho() - sep.v);
    if (sep.kind == SeparationCase::SamePiece) d += piece_distance(space.family.at(sep.piece), sep.f_value, sep.g_value);
    return d;
}

bool leq(const UPoint& f, const UPoint& g) {
    return f.segments.size() <= g.segments.size() &&
           std::equal(f.segments.begin(), f.segments.end(), g.segments.begin());
}

UPoint urestrict(const Space& space, const UPoint& f, const Scalar& x) {
    const PGeodesic cut = restrict_closed(space.family, f.pgeodesic(), x);
    UPoint out;
    out.segments.reserve(cut.steps.size());
    for (std::size_t a = 0; a < cut.steps.size(); ++a) {
        PStep step = cut.steps[a];
        out.segments.push_back({std::move(step.length), step.piece, std::move(step.value), f.segments[a].label});
    }
    return out;
}

ExplicitGeodesic::ExplicitGeodesic(const Space& space, UPoint f, UPoint g)
    : space_(space), f_(std::move(f)), g_(std::move(g)), sep_(tgraded::separation(f_, g_)) {
    require_family(space_, f_);
    require_family(space_, g_);
    descent_ = f_.rho() - sep_.u;
    traverse_ = sep_.kind == SeparationCase::SamePiece
                    ? piece_distance(space_.family.at(sep_.piece), sep_.f_value, sep_.g_value)
                    : Scalar(0);
    length_ = descent_ + traverse_ + (g_.rho() - sep_.v);
}

UPoint ExplicitGeodesic::eval(const Scalar& t) const {
    if (t.sign() < 0 || t > length_) {
        throw std::out_of_range("geodesic parameter " + t.str() + " outside [0, " + length_.str() + "]");
    }
    if (t <= descent_) return urestrict(space_, f_, f_.rho() - t);
    const Scalar crossed = t - descent_;
    if (crossed <= traverse_) {
        const Piece& p = space_.family.at(sep_.piece);
        const PiecePoint at = chosen_geodesic(p, sep_.f_value, sep_.g_value, crossed);
        UPoint out;
        out.segments.assign(f_.segments.begin(), f_.segments.begin() + static_cast<std::ptrdiff_t>(sep_.common));
        if (!is_basepoint(at)) {
            out.segments.push_back({piece_distance(p, basepoint(p), at), sep_.piece, at, sep_.label});
        }
        return out;
    }
    return urestrict(space_, g_, sep_.v + (crossed - traverse_));
}

std::vector<UPoint> realize_class(const Space& space, const PGeodesic& w, const std::vector<Label>& labels) {
    if (w.empty()) throw std::invalid_argument("cannot realize the empty P-geodesic");
    validate_steps(space.family, w);
    const auto tree_ids = space.family.ids_of_kind(PieceKind::Tree);
    if (!is_admissible(w, std::set<int>(tree_ids.begin(), tree_ids.end()))) {
        throw std::invalid_argument("P-geodesic is not admissible: consecutive steps in tree pieces");
    }
    std::set<Label> seen;
    std::vector<UPoint> out;
    out.reserve(labels.size());
    for (Label label : labels) {
        if (!seen.insert(label).second) throw std::invalid_argument("labels must be distinct");
        UPoint g;
        for (const PStep& s : w.steps) g.segments.push_back({s.length, s.piece, s.value, label});
        require_valid(space, g);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace tgraded
