#include "tgraded/io.hpp"

#include <stdexcept>

namespace tgraded::io {

json to_json(const Scalar& x) { return x.str(); }

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw std::invalid_argument("expected a rational string, got " + j.dump());
}

json to_json(const PiecePoint& x) {
    json out = json::array();
    if (const auto* w = std::get_if<Word>(&x)) {
        for (const Letter& l : *w) out.push_back(json::array({l.branch, to_json(l.length)}));
    } else {
        for (const Scalar& c : std::get<Coords>(x)) out.push_back(to_json(c));
    }
    return out;
}

PiecePoint point_from_json(const json& j, const Piece& piece) {
    if (!j.is_array()) throw std::invalid_argument("point must be an array, got " + j.dump());
    PiecePoint out;
    if (piece.kind == PieceKind::Tree) {
        Word w;
        for (const json& l : j) {
            if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer()) {
                throw std::invalid_argument("tree letter must be [branch, length], got " + l.dump());
            }
            w.push_back({l[0].get<int>(), scalar_from_json(l[1])});
        }
        out = std::move(w);
    } else {
        Coords c;
        for (const json& x : j) c.push_back(scalar_from_json(x));
        out = std::move(c);
    }
    check_point(piece, out);
    return out;
}

json to_json(const PieceFamily& family) {
    json pieces = json::array();
    for (const Piece& p : family.pieces()) {
        json e{{"id", p.id}, {"kind", kind_name(p.kind)}};
        if (p.kind == PieceKind::L1) e["dim"] = p.dim;
        pieces.push_back(std::move(e));
    }
    return json{{"pieces", std::move(pieces)}};
}

PieceFamily family_from_json(const json& j) {
    if (!j.contains("pieces") || !j["pieces"].is_array()) throw std::invalid_argument("family needs a \"pieces\" array");
    std::vector<Piece> pieces;
    for (const json& e : j["pieces"]) {
        const int id = e.at("id").get<int>();
        const std::string kind = e.at("kind").get<std::string>();
        if (kind == "line") {
            pieces.push_back(Piece::line(id));
        } else if (kind == "tree") {
            pieces.push_back(Piece::tree(id));
        } else if (kind == "l1") {
            pieces.push_back(Piece::l1(id, e.at("dim").get<std::size_t>()));
        } else {
            throw std::invalid_argument("unknown piece kind \"" + kind + "\"");
        }
    }
    return PieceFamily(std::move(pieces));
}

json to_json(const PGeodesic& g) {
    json steps = json::array();
    for (const PStep& s : g.steps) {
        steps.push_back(json{{"len", to_json(s.length)}, {"piece", s.piece}, {"value", to_json(s.value)}});
    }
    return json{{"steps", std::move(steps)}};
}

PGeodesic pgeodesic_from_json(const json& j, const PieceFamily& family) {
    PGeodesic g;
    for (const json& e : j.at("steps")) {
        const Piece& p = family.at(e.at("piece").get<int>());
        g.steps.push_back({scalar_from_json(e.at("len")), p.id, point_from_json(e.at("value"), p)});
    }
    validate_steps(family, g);
    return g;
}

json to_json(const UPoint& f) {
    json segs = json::array();
    for (const USegment& s : f.segments) {
        segs.push_back(json{{"label", s.label}, {"len", to_json(s.length)}, {"piece", s.piece}, {"value", to_json(s.value)}});
    }
    return json{{"segments", std::move(segs)}};
}

UPoint upoint_from_json(const json& j, const PieceFamily& family) {
    UPoint f;
    for (const json& e : j.at("segments")) {
        const Piece& p = family.at(e.at("piece").get<int>());
        f.segments.push_back(
            {scalar_from_json(e.at("len")), p.id, point_from_json(e.at("value"), p), e.value("label", Label{0})});
    }
    return f;
}

json to_json(const PieceRef& P) {
    return json{{"base", to_json(P.base)}, {"label", P.label}, {"piece", P.piece}};
}

PieceRef piece_ref_from_json(const json& j, const PieceFamily& family) {
    PieceRef P{upoint_from_json(j.at("base"), family), j.at("piece").get<int>(), j.value("label", Label{0})};
    family.at(P.piece);
    return P;
}

json to_json(const SeparationData& sep) {
    json out{{"s", to_json(sep.s)},
             {"u", to_json(sep.u)},
             {"v", to_json(sep.v)},
             {"case", sep.kind == SeparationCase::SamePiece ? "same_piece" : "split"}};
    if (sep.kind == SeparationCase::SamePiece) {
        out["piece"] = sep.piece;
        out["label"] = sep.label;
    }
    return out;
}

json to_json(const AxiomReport& report) {
    return json{{"axiom", report.axiom}, {"samples", report.samples}, {"violations", report.violations}};
}

std::string canonical(const json& j) { return j.dump(); }

}  // namespace tgraded::io
