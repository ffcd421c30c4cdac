#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tgraded/sampling.hpp"
#include "tgraded/universal.hpp"

namespace tgraded {

// The piece P(base, piece, label): base together with every base * f^{x,label},
// x ranging over the piece.
struct PieceRef {
    UPoint base;
    int piece = 0;
    Label label = 0;

    friend bool operator==(const PieceRef&, const PieceRef&) = default;
};

bool member(const UPoint& g, const PieceRef& P);

UPoint embed(const Space& space, const PieceRef& P, const PiecePoint& x);
PiecePoint coords(const Space& space, const PieceRef& P, const UPoint& g);  // throws on non-members

// Closest point of P to r.
UPoint project(const Space& space, const UPoint& r, const PieceRef& P);

// Points shared by two pieces. Throws std::invalid_argument when P == Q
// (the intersection is then the whole piece).
std::vector<UPoint> intersection(const PieceRef& P, const PieceRef& Q);

struct AxiomReport {
    std::string axiom;
    std::size_t samples = 0;
    std::vector<nlohmann::json> violations;
};

// Sampled verification of the projection-system identities and (T1) for the
// pieces of the space. Deterministic in `seed`.
std::vector<AxiomReport> check_axioms(const Space& space, std::size_t n_samples, std::uint64_t seed);

// A PieceRef whose base is a random prefix of `near`, often continuing along
// the next segment's piece and label.
PieceRef sample_piece_ref(Sampler& sampler, const UPoint& near);

}  // namespace tgraded
