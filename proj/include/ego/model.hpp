#ifndef EGO_MODEL_HPP
#define EGO_MODEL_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "ego/truth_set.hpp"

namespace ego {

// A point of evaluation: formulas hold (or not) at a world/agent pair.
struct PointedQuery {
    int world = -1;
    int agent = -1;
    bool operator==(const PointedQuery&) const = default;
};

// Finite epistemic model with extensions. Worlds and agents keep their
// declaration order; that order fixes the row-major cell numbering used by
// TruthSet (cell = world * n_agents + agent).
//
// The extension function is either rigid (a name denotes one agent per
// world) or agent-specific (the denotation also depends on who is using the
// name, as with "my best friend"). In agent-specific mode the reserved name
// "se" may be declared; it must denote the evaluating agent everywhere.
struct Model {
    enum class Mode { Rigid, AgentSpecific };

    Mode mode = Mode::Rigid;
    std::vector<std::string> worlds;
    std::vector<std::string> agents;
    std::vector<std::string> names;
    std::vector<std::string> props;

    // indist[a] = partition of world indices into blocks; blocks ordered by
    // smallest member, members ascending.
    std::vector<std::vector<std::vector<int>>> indist;

    // Rigid: extension_rigid[w][n] = agent index.
    // Agent-specific: extension_as[w][a][n] = agent index.
    std::vector<std::vector<int>> extension_rigid;
    std::vector<std::vector<std::vector<int>>> extension_as;

    // valuation[p] = set of cells where prop p holds.
    std::vector<TruthSet> valuation;

    std::size_t cell_count() const { return worlds.size() * agents.size(); }
    std::size_t cell(int world, int agent) const {
        return static_cast<std::size_t>(world) * agents.size() +
               static_cast<std::size_t>(agent);
    }

    // Lookup tables; built by finalize() once the model is valid.
    void finalize();
    int world_index(const std::string& id) const;  // -1 if unknown
    int agent_index(const std::string& id) const;
    int name_index(const std::string& id) const;
    int prop_index(const std::string& id) const;

    // Worlds the given agent cannot tell apart from `world` (its block,
    // including the world itself).
    const std::vector<int>& block_of(int agent, int world) const;

    // Referent of name n for evaluating agent a at world w. In rigid mode
    // the agent argument is ignored.
    int referent(int world, int agent, int name) const;

private:
    std::unordered_map<std::string, int> world_idx_;
    std::unordered_map<std::string, int> agent_idx_;
    std::unordered_map<std::string, int> name_idx_;
    std::unordered_map<std::string, int> prop_idx_;
    std::vector<std::vector<int>> block_id_; // [a][w] -> index into indist[a]
};

// Checks every model invariant and returns one message per violation; an
// empty result means the model is valid. Does not require finalize().
std::vector<std::string> validate_model(const Model& m);

// Built-in models: "M_DR" (four worlds, de dicto not expressible through de
// re alone) and "M_RD" (two worlds, de re not expressible through de dicto
// and @). Returned models are validated and finalized.
Model fixture(const std::string& id);

} // namespace ego

#endif
