#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "tgraded/universal.hpp"

namespace tgraded::suites {

using json = nlohmann::json;

// Every suite returns a report with a "violations" array (empty when clean)
// and is a pure function of its arguments.

// Symmetry, identity of indiscernibles and triangle inequality on sampled
// triples, plus the two case-(a) formulas, the sandwich bounds and the
// separation transport rule. Logs stratum counts under "strata".
json metric(const Space& space, const std::string& scenario, std::size_t triples, std::uint64_t seed);

// Explicit geodesics: length equals distance, endpoints are exact, and
// `params_per_pair` sub-segments have length b - a.
json geodesic(const Space& space, const std::string& scenario, std::size_t pairs, std::size_t params_per_pair,
              std::uint64_t seed);

// Projection-system identities and (T1) on the pieces of the space.
json projections(const Space& space, const std::string& scenario, std::size_t samples, std::uint64_t seed);

// Four-point condition with delta = 0. Throws std::invalid_argument unless
// every piece is a tree.
json realtree(const Space& space, const std::string& scenario, std::size_t quadruples, std::uint64_t seed);

// Bilipschitz bounds for s_Gamma and the point map under a uniform 3/2 scale,
// a mixed context with k = 3/2, and exact preservation under identities.
json stretch(std::size_t param_pairs, std::size_t point_pairs, std::uint64_t seed);

// Pairwise distance 2 l(w) between the realizations of a fixed admissible
// three-step class with `labels` labels.
json realize(std::size_t labels);

bool clean(const json& report);

}  // namespace tgraded::suites
