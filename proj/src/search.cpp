#include "ego/search.hpp"

#include <unordered_set>

#include "ego/error.hpp"
#include "ego/random.hpp"
#include "ego/semantics.hpp"

namespace ego {

namespace {

Signature search_signature() {
    Signature sig;
    sig.allow_not = true;
    sig.allow_or = true;
    sig.at_names = {Name{"bf"}};
    sig.dere_names = {Name{"bf"}};
    sig.props = {Prop{"p"}};
    return sig;
}

Formula search_target() { return Formula::DeDicto(Name{"bf"}, Formula::P("p")); }

// Truth-set-only closure of {[[p]]} under {not, or, @bf, Rbf} with an early
// definable exit and a member cap. Returns true iff the closure saturated
// under the cap and the target stayed outside.
bool undefinable_on(const Model& m, std::size_t member_cap) {
    const TruthSet target = truth_set(m, search_target());
    const TruthSet seed = m.valuation[0];
    if (seed == target)
        return false;

    const OpInstance ops[] = {{OpInstance::Kind::Not},
                              {OpInstance::Kind::At, 0},
                              {OpInstance::Kind::DeRe, 0}};
    std::unordered_set<TruthSet, TruthSet::Hash> members;
    std::vector<TruthSet> order;
    std::vector<TruthSet> work;
    members.insert(seed);
    order.push_back(seed);
    work.push_back(seed);
    auto add = [&](TruthSet t) {
        if (t == target)
            return false; // definable
        if (members.insert(t).second) {
            order.push_back(t);
            work.push_back(std::move(t));
        }
        return true;
    };
    while (!work.empty()) {
        const TruthSet s = std::move(work.back());
        work.pop_back();
        if (members.size() > member_cap)
            return false; // too large to be the witness we are after
        const TruthSet args[] = {s};
        for (const OpInstance& op : ops)
            if (!add(apply_op(m, op, args)))
                return false;
        for (std::size_t i = 0; i < order.size(); ++i)
            if (!add(s.union_with(order[i])))
                return false;
    }
    return true;
}

// Exact test for the eight-set family shape: [[p]] and [[@p]] disjoint and
// nonempty with a nonempty remainder (making the generated Boolean algebra
// exactly the eight sets), @@p and the de re image of every member staying
// inside, and [[D p]] outside. Equivalent to "the closure saturates at those
// eight sets and misses the target", but runs in a handful of grid passes.
bool minimal_family_witness(const Model& m) {
    const TruthSet p = m.valuation[0];
    const TruthSet args_p[] = {p};
    const TruthSet at_p = apply_op(m, {OpInstance::Kind::At, 0}, args_p);
    if (!p.intersect(at_p).empty_set())
        return false;
    const TruthSet p_or_atp = p.union_with(at_p);
    const TruthSet rest = p_or_atp.complement();
    if (p.empty_set() || at_p.empty_set() || rest.empty_set())
        return false;

    const TruthSet family[8] = {TruthSet::none(p.size()),
                                TruthSet::all(p.size()),
                                p,
                                p.complement(),
                                at_p,
                                at_p.complement(),
                                rest,
                                p_or_atp};
    auto inside = [&](const TruthSet& t) {
        for (const TruthSet& f : family)
            if (f == t)
                return true;
        return false;
    };

    const TruthSet args_atp[] = {at_p};
    if (!inside(apply_op(m, {OpInstance::Kind::At, 0}, args_atp)))
        return false;
    for (const TruthSet& f :
         {p, p.complement(), at_p, at_p.complement(), rest, p_or_atp}) {
        const TruthSet args[] = {f};
        if (!inside(apply_op(m, {OpInstance::Kind::DeRe, 0}, args)))
            return false;
    }
    const TruthSet args_d[] = {p};
    return !inside(apply_op(m, {OpInstance::Kind::DeDicto, 0}, args_d));
}

// All set partitions of {0..n-1}, blocks ordered by smallest member.
void enumerate_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&]() {
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < n; ++i) {
            const auto b = static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)]);
            if (b >= blocks.size())
                blocks.emplace_back();
            blocks[b].push_back(i);
        }
        out.push_back(std::move(blocks));
    };
    // Odometer over restricted growth strings.
    for (;;) {
        emit();
        int i = n - 1;
        for (; i > 0; --i) {
            int max_prefix = 0;
            for (int j = 0; j < i; ++j)
                max_prefix = std::max(max_prefix, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= max_prefix) {
                ++rgs[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < n; ++j)
                    rgs[static_cast<std::size_t>(j)] = 0;
                break;
            }
        }
        if (i == 0)
            break;
    }
}

Model base_model(int n_worlds, int n_agents) {
    Model m;
    m.mode = Model::Mode::AgentSpecific;
    static const char* kWorldNames[] = {"w", "u", "v", "t"};
    for (int i = 0; i < n_worlds; ++i)
        m.worlds.push_back(i < 4 && n_worlds <= 4
                               ? kWorldNames[i]
                               : "w" + std::to_string(i));
    for (int i = 0; i < n_agents; ++i)
        m.agents.push_back(n_agents <= 26
                               ? std::string(1, static_cast<char>('a' + i))
                               : "a" + std::to_string(i));
    m.names = {"bf"};
    m.props = {"p"};
    m.extension_as.assign(
        static_cast<std::size_t>(n_worlds),
        std::vector<std::vector<int>>(static_cast<std::size_t>(n_agents), {0}));
    m.valuation = {TruthSet(m.cell_count())};
    return m;
}

CounterexampleResult hit(Model m, std::uint64_t tried) {
    Certificate cert = decide_definability(m, search_target(), search_signature());
    if (cert.definable || !verify_certificate(cert))
        throw Error("search: candidate failed certificate verification "
                    "(internal error)");
    CounterexampleResult r;
    r.found = true;
    r.model = std::move(m);
    r.certificate = std::move(cert);
    r.candidates_tried = tried;
    return r;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a)
        return UINT64_MAX;
    return a * b;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--)
        r = saturating_mul(r, base);
    return r;
}

} // namespace

CounterexampleResult search_agent_specific_counterexample(
    CounterexampleBounds bounds, std::uint64_t seed) {
    if (bounds.max_worlds < 1 || bounds.max_agents < 1)
        throw Error("search: bounds must allow at least one world and agent");
    if (bounds.max_worlds > 8 || bounds.max_agents > 8)
        throw Error("search: bounds above 8x8 are not supported");

    // Total number of candidate models within the bounds. Small spaces are
    // enumerated outright.
    static const std::uint64_t kBell[9] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    std::uint64_t space = 0;
    for (int n_w = 1; n_w <= bounds.max_worlds; ++n_w)
        for (int n_a = 1; n_a <= bounds.max_agents; ++n_a) {
            const auto cells = static_cast<std::uint64_t>(n_w) *
                               static_cast<std::uint64_t>(n_a);
            std::uint64_t c = pow_u64(kBell[n_w], static_cast<std::uint64_t>(n_a));
            c = saturating_mul(c, pow_u64(static_cast<std::uint64_t>(n_a), cells));
            c = saturating_mul(c, pow_u64(2, cells));
            space = space + c < space ? UINT64_MAX : space + c;
        }

    std::uint64_t tried = 0;
    if (space <= (1u << 20)) {
        for (int n_w = 1; n_w <= bounds.max_worlds; ++n_w) {
            std::vector<std::vector<std::vector<int>>> partitions;
            enumerate_partitions(n_w, partitions);
            for (int n_a = 1; n_a <= bounds.max_agents; ++n_a) {
                const std::size_t cells = static_cast<std::size_t>(n_w) *
                                          static_cast<std::size_t>(n_a);
                Model m = base_model(n_w, n_a);
                // Odometer over (partition choice per agent, extension, valuation).
                std::vector<std::size_t> part_ix(static_cast<std::size_t>(n_a), 0);
                for (;;) {
                    m.indist.clear();
                    for (std::size_t a = 0; a < part_ix.size(); ++a)
                        m.indist.push_back(partitions[part_ix[a]]);
                    m.finalize();
                    std::vector<std::size_t> ext_ix(cells, 0);
                    for (;;) {
                        for (int w = 0; w < n_w; ++w)
                            for (int a = 0; a < n_a; ++a)
                                m.extension_as[static_cast<std::size_t>(w)]
                                              [static_cast<std::size_t>(a)][0] =
                                    static_cast<int>(
                                        ext_ix[static_cast<std::size_t>(w) *
                                                   static_cast<std::size_t>(n_a) +
                                               static_cast<std::size_t>(a)]);
                        for (std::uint64_t val = 0;
                             val < (std::uint64_t{1} << cells); ++val) {
                            for (std::size_t i = 0; i < cells; ++i)
                                m.valuation[0].set(i, (val >> i) & 1);
                            ++tried;
                            if (undefinable_on(m, std::size_t{1} << cells))
                                return hit(m, tried);
                        }
                        std::size_t d = 0;
                        while (d < cells &&
                               ++ext_ix[d] == static_cast<std::size_t>(n_a)) {
                            ext_ix[d] = 0;
                            ++d;
                        }
                        if (d == cells)
                            break;
                    }
                    std::size_t d = 0;
                    while (d < part_ix.size() &&
                           ++part_ix[d] == partitions.size()) {
                        part_ix[d] = 0;
                        ++d;
                    }
                    if (d == part_ix.size())
                        break;
                }
            }
        }
        CounterexampleResult r;
        r.message = "no witness found in bounded space";
        r.candidates_tried = tried;
        return r;
    }

    // Seeded-random walk. When the bounds admit the known witness shape
    // (four worlds, three agents, every agent lumping the worlds into two
    // pairs) most draws come from that slice and are screened with the
    // eight-set test; a slice of fully uniform draws keeps the rest of the
    // space covered.
    std::mt19937_64 rng(seed);
    const bool structured_ok = bounds.max_worlds >= 4 && bounds.max_agents >= 3;
    Model structured = base_model(4, 3);
    if (structured_ok) {
        structured.indist.assign(3, {{0, 1}, {2, 3}});
        structured.finalize();
    }

    const std::uint64_t budget = structured_ok ? 10'000'000 : 500'000;
    while (tried < budget) {
        ++tried;
        const bool uniform_draw = !structured_ok || tried % 16 == 0;
        if (!uniform_draw) {
            for (int w = 0; w < 4; ++w)
                for (int a = 0; a < 3; ++a)
                    structured.extension_as[static_cast<std::size_t>(w)]
                                           [static_cast<std::size_t>(a)][0] =
                        static_cast<int>(uniform_below(rng, 3));
            for (std::size_t i = 0; i < 12; ++i)
                structured.valuation[0].set(i, rng() & 1);
            if (minimal_family_witness(structured))
                return hit(structured, tried);
            continue;
        }
        RandomModelParams params;
        params.mode = Model::Mode::AgentSpecific;
        params.n_worlds =
            1 + static_cast<int>(uniform_below(
                    rng, static_cast<std::uint64_t>(bounds.max_worlds)));
        params.n_agents =
            1 + static_cast<int>(uniform_below(
                    rng, static_cast<std::uint64_t>(bounds.max_agents)));
        params.n_names = 1;
        params.n_props = 1;
        Model m = random_model(params, rng);
        m.names[0] = "bf";
        m.props[0] = "p";
        m.finalize();
        if (minimal_family_witness(m))
            return hit(m, tried);
        // The eight-set screen can miss witnesses with larger families;
        // occasionally run the full test.
        if (tried % 64 == 0 && undefinable_on(m, 64))
            return hit(std::move(m), tried);
    }

    CounterexampleResult r;
    r.message = "no witness found in bounded space (search budget exhausted)";
    r.candidates_tried = tried;
    return r;
}

} // namespace ego
