#ifndef EGO_RANDOM_HPP
#define EGO_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ego/formula.hpp"
#include "ego/model.hpp"

namespace ego {

// Uniform integer in [0, n). Rejection sampling over raw mt19937_64 output,
// so results are identical across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Uniformly random set partition of {0..n-1}, sampled through restricted
// growth strings weighted by exact completion counts. Blocks come back
// ordered by smallest member, members ascending. Requires n <= 20 so the
// counting table fits in 64 bits.
std::vector<std::vector<int>> random_partition(std::mt19937_64& rng, int n);

struct RandomModelParams {
    int n_worlds = 1;
    int n_agents = 1;
    int n_names = 0;
    int n_props = 0;
    Model::Mode mode = Model::Mode::Rigid;
    bool with_se = false; // agent-specific only: add the se name
};

// Deterministic in (params, seed). Worlds are w0..wk, agents a0.., names
// n0.. (plus se when requested), props p0... Draw order: one partition per
// agent, then the extension entries (worlds outer, names inner; agents in
// between for agent-specific mode), then one coin per valuation cell.
// The result validates and is finalized.
Model random_model(const RandomModelParams& params, std::uint64_t seed);
Model random_model(const RandomModelParams& params, std::mt19937_64& rng);

// Random formula over the model's declared names and props, at most
// max_size AST nodes. Uses the full connective set; never produces the se
// name unless the model declares it.
Formula random_formula(std::mt19937_64& rng, const Model& m, int max_size);

} // namespace ego

#endif
