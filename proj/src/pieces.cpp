#include "tgraded/pieces.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tgraded/errors.hpp"

namespace tgraded {

namespace {

const Coords& coords_of(const PiecePoint& x) {
    if (const auto* c = std::get_if<Coords>(&x)) return *c;
    throw std::invalid_argument("expected a coordinate point, got a tree word");
}

const Word& word_of(const PiecePoint& x) {
    if (const auto* w = std::get_if<Word>(&x)) return *w;
    throw std::invalid_argument("expected a tree word, got coordinates");
}

const Coords& checked_coords(const Piece& p, const PiecePoint& x) {
    const Coords& c = coords_of(x);
    if (c.size() != p.dim) {
        throw std::invalid_argument("point has " + std::to_string(c.size()) + " coordinates, piece " +
                                    std::to_string(p.id) + " has dimension " + std::to_string(p.dim));
    }
    return c;
}

// Appends `l` to a reduced word kept as a stack, cancelling against the top.
void push_reduced(Word& stack, Letter l) {
    while (!stack.empty() && !l.length.is_zero()) {
        Letter& top = stack.back();
        if (top.branch == l.branch) {
            top.length += l.length;
            return;
        }
        if (top.branch != -l.branch) break;
        if (top.length > l.length) {
            top.length -= l.length;
            return;
        }
        l.length -= top.length;
        l.branch = -top.branch;
        stack.pop_back();
        // The new top differs from both +-l.branch, so one more pass suffices.
    }
    if (!l.length.is_zero()) stack.push_back(std::move(l));
}

}  // namespace

const char* kind_name(PieceKind kind) {
    switch (kind) {
        case PieceKind::Line: return "line";
        case PieceKind::L1: return "l1";
        case PieceKind::Tree: return "tree";
    }
    return "?";
}

PiecePoint basepoint(const Piece& p) {
    if (p.kind == PieceKind::Tree) return Word{};
    return Coords(p.dim, Scalar(0));
}

bool is_basepoint(const PiecePoint& x) {
    if (const auto* w = std::get_if<Word>(&x)) return w->empty();
    const auto& c = std::get<Coords>(x);
    return std::all_of(c.begin(), c.end(), [](const Scalar& v) { return v.is_zero(); });
}

void check_point(const Piece& p, const PiecePoint& x) {
    if (p.kind != PieceKind::Tree) {
        checked_coords(p, x);
        return;
    }
    const Word& w = word_of(x);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].branch == 0) throw std::invalid_argument("tree word uses branch id 0");
        if (w[i].length.sign() <= 0) throw std::invalid_argument("tree word has a non-positive length");
        if (i > 0 && (w[i].branch == w[i - 1].branch || w[i].branch == -w[i - 1].branch)) {
            throw std::invalid_argument("tree word is not reduced");
        }
    }
}

Word reduce(std::span<const Letter> word) {
    Word out;
    out.reserve(word.size());
    for (const Letter& l : word) push_reduced(out, l);
    return out;
}

Word inverse(std::span<const Letter> word) {
    Word out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back({-it->branch, it->length});
    return out;
}

Word multiply(std::span<const Letter> a, std::span<const Letter> b) {
    Word out = reduce(a);
    for (const Letter& l : b) push_reduced(out, l);
    return out;
}

Scalar word_length(std::span<const Letter> word) {
    Scalar total(0);
    for (const Letter& l : word) total += l.length;
    return total;
}

Scalar piece_distance(const Piece& p, const PiecePoint& a, const PiecePoint& b) {
    if (p.kind == PieceKind::Tree) {
        return word_length(multiply(inverse(word_of(a)), word_of(b)));
    }
    const Coords& ca = checked_coords(p, a);
    const Coords& cb = checked_coords(p, b);
    Scalar total(0);
    for (std::size_t i = 0; i < ca.size(); ++i) total += abs(ca[i] - cb[i]);
    return total;
}

PiecePoint chosen_geodesic(const Piece& p, const PiecePoint& a, const PiecePoint& b, const Scalar& t) {
    const Scalar d = piece_distance(p, a, b);
    if (t.sign() < 0 || t > d) {
        throw std::out_of_range("geodesic parameter " + t.str() + " outside [0, " + d.str() + "]");
    }
    if (t.is_zero()) return a;
    if (t == d) return b;
    if (p.kind == PieceKind::Tree) {
        const Word step = multiply(inverse(word_of(a)), word_of(b));
        Word prefix;
        Scalar left = t;
        for (const Letter& l : step) {
            if (left.is_zero()) break;
            if (l.length <= left) {
                prefix.push_back(l);
                left -= l.length;
            } else {
                prefix.push_back({l.branch, left});
                left = Scalar(0);
            }
        }
        return multiply(word_of(a), prefix);
    }
    const Coords& ca = coords_of(a);
    const Coords& cb = coords_of(b);
    const Scalar frac = t / d;
    Coords out(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i) out[i] = ca[i] + (cb[i] - ca[i]) * frac;
    return out;
}

PiecePoint recenter(const Piece& p, const PiecePoint& x, const PiecePoint& y) {
    if (p.kind == PieceKind::Tree) return multiply(inverse(word_of(x)), word_of(y));
    const Coords& cx = checked_coords(p, x);
    const Coords& cy = checked_coords(p, y);
    Coords out(cx.size());
    for (std::size_t i = 0; i < cx.size(); ++i) out[i] = cy[i] - cx[i];
    return out;
}

PieceFamily::PieceFamily(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i > 0 && pieces_[i].id == pieces_[i - 1].id) {
            throw std::invalid_argument("duplicate piece id " + std::to_string(pieces_[i].id));
        }
        const Piece& p = pieces_[i];
        if (p.kind == PieceKind::Line && p.dim != 1) throw std::invalid_argument("line piece must have dimension 1");
        if (p.kind == PieceKind::L1 && p.dim == 0) throw std::invalid_argument("l1 piece needs dimension >= 1");
        if (p.kind == PieceKind::Tree) pieces_[i].dim = 0;
    }
}

const Piece* PieceFamily::find(int id) const {
    auto it = std::lower_bound(pieces_.begin(), pieces_.end(), id,
                               [](const Piece& p, int key) { return p.id < key; });
    return (it != pieces_.end() && it->id == id) ? &*it : nullptr;
}

const Piece& PieceFamily::at(int id) const {
    if (const Piece* p = find(id)) return *p;
    throw FamilyMismatch("piece id " + std::to_string(id) + " is not in the family");
}

std::vector<int> PieceFamily::ids_of_kind(PieceKind kind) const {
    std::vector<int> ids;
    for (const Piece& p : pieces_) {
        if (p.kind == kind) ids.push_back(p.id);
    }
    return ids;
}

bool PieceFamily::all_of_kind(PieceKind kind) const {
    return std::all_of(pieces_.begin(), pieces_.end(), [kind](const Piece& p) { return p.kind == kind; });
}

BilipschitzMap::BilipschitzMap(int src, int dst, MapKind kind, std::vector<Scalar> lambdas)
    : src_(src), dst_(dst), kind_(kind), lambdas_(std::move(lambdas)) {
    for (const Scalar& l : lambdas_) {
        if (l.sign() <= 0) throw std::invalid_argument("scale factors must be positive");
        k_ = max(k_, max(l, Scalar(1) / l));
    }
}

BilipschitzMap BilipschitzMap::identity(int src, int dst) { return {src, dst, MapKind::Identity, {}}; }

BilipschitzMap BilipschitzMap::scale(int src, int dst, Scalar lambda) {
    return {src, dst, MapKind::Scale, {std::move(lambda)}};
}

BilipschitzMap BilipschitzMap::coordinate_scale(int src, int dst, std::vector<Scalar> lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("coordinate scale needs at least one factor");
    return {src, dst, MapKind::CoordinateScale, std::move(lambdas)};
}

PiecePoint BilipschitzMap::apply(const Piece& from, const Piece& to, const PiecePoint& x) const {
    if (from.kind != to.kind || from.dim != to.dim) {
        throw std::invalid_argument("bilipschitz map between pieces of different shape");
    }
    check_point(from, x);
    switch (kind_) {
        case MapKind::Identity:
            return x;
        case MapKind::Scale:
            if (const auto* w = std::get_if<Word>(&x)) {
                Word out = *w;
                for (Letter& l : out) l.length *= lambdas_[0];
                return out;
            } else {
                Coords out = std::get<Coords>(x);
                for (Scalar& c : out) c *= lambdas_[0];
                return out;
            }
        case MapKind::CoordinateScale: {
            if (from.kind == PieceKind::Tree) throw std::invalid_argument("coordinate scale on a tree piece");
            if (lambdas_.size() != from.dim) throw std::invalid_argument("coordinate scale dimension mismatch");
            Coords out = std::get<Coords>(x);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] *= lambdas_[i];
            return out;
        }
    }
    return x;
}

}  // namespace tgraded
