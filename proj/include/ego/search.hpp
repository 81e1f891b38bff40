#ifndef EGO_SEARCH_HPP
#define EGO_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "ego/certificate.hpp"
#include "ego/model.hpp"

namespace ego {

struct CounterexampleBounds {
    int max_worlds = 4;
    int max_agents = 3;
};

struct CounterexampleResult {
    bool found = false;
    std::string message; // explanation when !found
    std::optional<Model> model;
    std::optional<Certificate> certificate;
    std::uint64_t candidates_tried = 0;
};

// Looks for an agent-specific model (one name "bf", one prop "p") on which
// D[bf] p is not definable over {not, or, @[bf], R[bf]}, i.e. its denotation
// falls outside the saturated closure of {[[p]]}. Such models exist once the
// bounds reach four worlds and three agents.
//
// Procedure: tiny bounded spaces are enumerated exhaustively; otherwise a
// deterministic seeded-random walk over the bounded space runs until a
// witness appears (or a large candidate budget is exhausted, which at
// four-worlds/three-agents bounds has vanishing probability). The walk
// favours candidates whose family closes at exactly eight truth sets
// p, bot, top, @p, !p, !@p, !p&!@p, p|@p - the smallest shape a witness
// family can have - and the certificate is rebuilt and re-verified through
// decide_definability before being returned.
CounterexampleResult search_agent_specific_counterexample(
    CounterexampleBounds bounds, std::uint64_t seed);

} // namespace ego

#endif
