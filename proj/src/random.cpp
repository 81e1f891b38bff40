#include "ego/random.hpp"

#include <bit>
#include <map>

#include "ego/error.hpp"

namespace ego {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0)
        throw Error("uniform_below: empty range");
    if (n == 1)
        return 0;
    const int bits = std::bit_width(n - 1);
    const std::uint64_t mask =
        bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < n)
            return v;
    }
}

std::vector<std::vector<int>> random_partition(std::mt19937_64& rng, int n) {
    if (n < 0 || n > 20)
        throw Error("random_partition: n must be in [0, 20]");
    if (n == 0)
        return {};

    // completions[i][k]: extensions of a restricted growth string from
    // position i when k block labels are already in use.
    std::vector<std::vector<std::uint64_t>> completions(
        static_cast<std::size_t>(n) + 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 2, 0));
    for (int k = 0; k <= n + 1; ++k)
        completions[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = 1;
    for (int i = n - 1; i >= 0; --i)
        for (int k = n; k >= 0; --k)
            completions[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                static_cast<std::uint64_t>(k) *
                    completions[static_cast<std::size_t>(i + 1)]
                               [static_cast<std::size_t>(k)] +
                completions[static_cast<std::size_t>(i + 1)]
                           [static_cast<std::size_t>(k + 1)];

    std::vector<std::vector<int>> blocks;
    int used = 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t total =
            completions[static_cast<std::size_t>(i)][static_cast<std::size_t>(used)];
        const std::uint64_t r = uniform_below(rng, total);
        const std::uint64_t weight_old =
            completions[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(used)];
        int value;
        if (r < static_cast<std::uint64_t>(used) * weight_old)
            value = static_cast<int>(r / weight_old);
        else
            value = used;
        if (value == used) {
            blocks.emplace_back();
            ++used;
        }
        blocks[static_cast<std::size_t>(value)].push_back(i);
    }
    return blocks;
}

Model random_model(const RandomModelParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_model(params, rng);
}

Model random_model(const RandomModelParams& params, std::mt19937_64& rng) {
    const bool agent_specific = params.mode == Model::Mode::AgentSpecific;
    if (params.n_worlds < 0 || params.n_agents < 0 || params.n_names < 0 ||
        params.n_props < 0)
        throw Error("random_model: negative count");
    const int n_names_total =
        params.n_names + (agent_specific && params.with_se ? 1 : 0);
    if (n_names_total > 0 && params.n_worlds > 0 && params.n_agents == 0)
        throw Error("random_model: inconsistent params "
                    "(names require at least one agent)");
    if (params.with_se && !agent_specific)
        throw Error("random_model: the se name requires agent-specific mode");

    Model m;
    m.mode = params.mode;
    for (int i = 0; i < params.n_worlds; ++i)
        m.worlds.push_back("w" + std::to_string(i));
    for (int i = 0; i < params.n_agents; ++i)
        m.agents.push_back("a" + std::to_string(i));
    for (int i = 0; i < params.n_names; ++i)
        m.names.push_back("n" + std::to_string(i));
    if (agent_specific && params.with_se)
        m.names.push_back(kSelfName);
    for (int i = 0; i < params.n_props; ++i)
        m.props.push_back("p" + std::to_string(i));

    for (int a = 0; a < params.n_agents; ++a)
        m.indist.push_back(random_partition(rng, params.n_worlds));

    const std::size_t n_names = m.names.size();
    if (!agent_specific) {
        for (int w = 0; w < params.n_worlds; ++w) {
            std::vector<int> row(n_names);
            for (std::size_t n = 0; n < n_names; ++n)
                row[n] = static_cast<int>(
                    uniform_below(rng, static_cast<std::uint64_t>(params.n_agents)));
            m.extension_rigid.push_back(std::move(row));
        }
    } else {
        for (int w = 0; w < params.n_worlds; ++w) {
            std::vector<std::vector<int>> per_agent;
            for (int a = 0; a < params.n_agents; ++a) {
                std::vector<int> row(n_names);
                for (std::size_t n = 0; n < n_names; ++n) {
                    if (m.names[n] == kSelfName)
                        row[n] = a;
                    else
                        row[n] = static_cast<int>(uniform_below(
                            rng, static_cast<std::uint64_t>(params.n_agents)));
                }
                per_agent.push_back(std::move(row));
            }
            m.extension_as.push_back(std::move(per_agent));
        }
    }

    for (int p = 0; p < params.n_props; ++p) {
        TruthSet t(m.cell_count());
        for (std::size_t i = 0; i < m.cell_count(); ++i)
            if (rng() & 1)
                t.set(i);
        m.valuation.push_back(std::move(t));
    }

    const auto violations = validate_model(m);
    if (!violations.empty())
        throw Error("random_model: generated model is invalid: " +
                    violations.front());
    m.finalize();
    return m;
}

namespace {

Formula random_formula_rec(std::mt19937_64& rng, const Model& m, int budget) {
    const bool have_props = !m.props.empty();
    const bool have_names = !m.names.empty() && !m.agents.empty();

    auto leaf = [&]() -> Formula {
        // Mostly props when available; constants keep leaves total otherwise.
        if (have_props && uniform_below(rng, 8) < 7) {
            const auto p = uniform_below(rng, m.props.size());
            return Formula::P(m.props[p]);
        }
        return uniform_below(rng, 2) ? Formula::True() : Formula::False();
    };

    if (budget <= 1)
        return leaf();

    const std::uint64_t choices = have_names ? 6 : 3;
    switch (uniform_below(rng, choices)) {
    case 0:
        return leaf();
    case 1:
        return Formula::Not(random_formula_rec(rng, m, budget - 1));
    case 2: {
        if (budget < 3) // a disjunction needs three nodes
            return Formula::Not(random_formula_rec(rng, m, budget - 1));
        const int left = 1 + static_cast<int>(uniform_below(
                                 rng, static_cast<std::uint64_t>(budget - 2)));
        const int right = budget - 1 - left;
        return Formula::Or(random_formula_rec(rng, m, left),
                           random_formula_rec(rng, m, right));
    }
    default: {
        const Name n{m.names[uniform_below(rng, m.names.size())]};
        Formula body = random_formula_rec(rng, m, budget - 1);
        switch (uniform_below(rng, 3)) {
        case 0:
            return Formula::At(n, std::move(body));
        case 1:
            return Formula::DeRe(n, std::move(body));
        default:
            return Formula::DeDicto(n, std::move(body));
        }
    }
    }
}

} // namespace

Formula random_formula(std::mt19937_64& rng, const Model& m, int max_size) {
    if (max_size < 1)
        throw Error("random_formula: max_size must be >= 1");
    return random_formula_rec(rng, m, max_size);
}

} // namespace ego
