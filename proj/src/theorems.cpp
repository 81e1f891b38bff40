#include "ego/theorems.hpp"

#include <chrono>
#include <functional>

#include "ego/certificate.hpp"
#include "ego/closure.hpp"
#include "ego/error.hpp"
#include "ego/model.hpp"
#include "ego/random.hpp"
#include "ego/search.hpp"
#include "ego/semantics.hpp"
#include "ego/signature.hpp"

namespace ego {

namespace {

struct CheckFailure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok)
        throw CheckFailure{detail};
}

std::vector<Formula> fixture_bodies() {
    const Name ann{"Ann"};
    const Formula p = Formula::P("p");
    return {p, Formula::Not(p), Formula::DeRe(ann, p), Formula::DeDicto(ann, p)};
}

void check_theorem1(std::uint64_t seed) {
    // Fixtures first: every body and every pair of names.
    for (const std::string& id : {"M_DR", "M_RD"}) {
        const Model m = fixture(id);
        for (const Formula& body : fixture_bodies())
            for (const std::string& n : m.names)
                for (const std::string& n2 : m.names) {
                    const Formula lhs = Formula::DeDicto(Name{n}, body);
                    const Formula rhs =
                        Formula::DeRe(Name{n2}, Formula::At(Name{n}, body));
                    require(equivalent_on(m, lhs, rhs),
                            id + ": " + lhs.str() + " differs from " + rhs.str());
                }
    }

    // Random rigid models and formulas.
    std::mt19937_64 rng(seed);
    for (int round = 0; round < 1000; ++round) {
        RandomModelParams params;
        params.n_worlds = 1 + static_cast<int>(uniform_below(rng, 5));
        params.n_agents = 1 + static_cast<int>(uniform_below(rng, 4));
        params.n_names = 1 + static_cast<int>(uniform_below(rng, 2));
        params.n_props = 1 + static_cast<int>(uniform_below(rng, 2));
        const Model m = random_model(params, rng);
        for (int i = 0; i < 50; ++i) {
            const Formula body = random_formula(rng, m, 9);
            for (const std::string& n : m.names)
                for (const std::string& n2 : m.names) {
                    const Formula lhs = Formula::DeDicto(Name{n}, body);
                    const Formula rhs =
                        Formula::DeRe(Name{n2}, Formula::At(Name{n}, body));
                    require(equivalent_on(m, lhs, rhs),
                            "round " + std::to_string(round) + ": " + lhs.str() +
                                " differs from " + rhs.str());
                }
        }
    }
}

TruthSet denote(const Model& m, const Formula& f) { return truth_set(m, f); }

void check_boolean_family(const Model& m, const ClosureFamily& family,
                          const std::string& where) {
    const Formula p = Formula::P("p");
    const TruthSet expected[4] = {denote(m, p), denote(m, Formula::Not(p)),
                                  TruthSet::none(m.cell_count()),
                                  TruthSet::all(m.cell_count())};
    require(family.size() == 4, where + ": family has " +
                                    std::to_string(family.size()) +
                                    " members, expected 4");
    for (const TruthSet& t : expected)
        require(family.contains(t), where + ": expected member missing");
}

Model corrupted_m_dr() {
    Model m = fixture("M_DR");
    // Drop (t, a) from the valuation; the closure family changes shape.
    m.valuation[0].set(m.cell(3, 0), false);
    return m;
}

void check_theorem3(bool corrupt) {
    const Model m = corrupt ? corrupted_m_dr() : fixture("M_DR");
    const Signature sig = parse_signature("p;not,or;R[Ann]");
    const ClosureFamily family = close(m, sig);
    check_boolean_family(m, family, "closure over {not,or,R[Ann]}");

    const Formula target = Formula::DeDicto(Name{"Ann"}, Formula::P("p"));
    const Certificate cert = decide_definability(m, target, sig);
    require(!cert.definable, "D[Ann] p unexpectedly definable");
    require(verify_certificate(cert), "certificate failed re-verification");
}

void check_theorem4() {
    const Model m = fixture("M_RD");
    const Signature sig = parse_signature("p;not,or;D[Ann],@[Ann]");
    const ClosureFamily family = close(m, sig);
    check_boolean_family(m, family, "closure over {not,or,D[Ann],@[Ann]}");

    const Formula target = Formula::DeRe(Name{"Ann"}, Formula::P("p"));
    TruthSet expected(m.cell_count());
    expected.set(m.cell(0, 1)); // (w, b)
    expected.set(m.cell(1, 1)); // (u, b)
    require(denote(m, target) == expected,
            "R[Ann] p has an unexpected denotation on the two-world fixture");
    const Certificate cert = decide_definability(m, target, sig);
    require(!cert.definable, "R[Ann] p unexpectedly definable");
    require(verify_certificate(cert), "certificate failed re-verification");
}

void check_theorem5(std::uint64_t seed) {
    const CounterexampleResult r =
        search_agent_specific_counterexample({4, 3}, seed);
    require(r.found, "search found no witness: " + r.message);
    require(verify_certificate(*r.certificate),
            "certificate failed re-verification");
    require(!r.certificate->definable, "witness certificate is not undefinable");

    const Model& m = *r.model;
    const Name bf{"bf"};
    const Formula p = Formula::P("p");
    const Formula at_p = Formula::At(bf, p);
    const Formula patterns[8] = {
        p,
        Formula::False(),
        Formula::True(),
        at_p,
        Formula::Not(p),
        Formula::Not(at_p),
        Formula::And(Formula::Not(p), Formula::Not(at_p)),
        Formula::Or(p, at_p),
    };
    for (const Formula& f : patterns)
        require(r.certificate->family->contains(denote(m, f)),
                "family is missing the denotation of " + f.str());
}

void check_se_recovery(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int round = 0; round < 500; ++round) {
        RandomModelParams params;
        params.mode = Model::Mode::AgentSpecific;
        params.with_se = true;
        params.n_worlds = 1 + static_cast<int>(uniform_below(rng, 5));
        params.n_agents = 1 + static_cast<int>(uniform_below(rng, 4));
        params.n_names = static_cast<int>(uniform_below(rng, 3));
        params.n_props = 1 + static_cast<int>(uniform_below(rng, 2));
        const Model m = random_model(params, rng);
        for (int i = 0; i < 20; ++i) {
            const Formula body = random_formula(rng, m, 9);
            for (const std::string& n : m.names) {
                const Formula lhs = Formula::DeDicto(Name{n}, body);
                const Formula rhs = Formula::DeRe(
                    Name{kSelfName}, Formula::At(Name{n}, body));
                require(equivalent_on(m, lhs, rhs),
                        "round " + std::to_string(round) + ": " + lhs.str() +
                            " differs from " + rhs.str());
            }
        }
    }
}

TheoremCheck run_one(const std::string& id, const std::string& label,
                     const std::function<void()>& body) {
    TheoremCheck check;
    check.id = id;
    check.label = label;
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        check.pass = true;
    } catch (const CheckFailure& f) {
        check.pass = false;
        check.detail = f.detail;
    } catch (const Error& e) {
        check.pass = false;
        check.detail = e.what();
    }
    check.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return check;
}

} // namespace

PaperReport run_paper_checks(const PaperCheckOptions& options) {
    PaperReport report;
    report.checks.push_back(run_one(
        "theorem-1", "Theorem 1: D[n]x is equivalent to R[m]@[n]x (rigid names)",
        [&] { check_theorem1(options.seed); }));
    report.checks.push_back(run_one(
        "theorem-3",
        "Theorem 3: D[Ann]p is not definable from {not, or, R[Ann]}",
        [&] { check_theorem3(options.corrupt_m_dr); }));
    report.checks.push_back(run_one(
        "theorem-4",
        "Theorem 4: R[Ann]p is not definable from {not, or, D[Ann], @[Ann]}",
        [&] { check_theorem4(); }));
    report.checks.push_back(run_one(
        "theorem-5",
        "Theorem 5: with agent-specific names, D[bf]p is not definable from "
        "{not, or, R[bf], @[bf]}",
        [&] { check_theorem5(options.seed); }));
    report.checks.push_back(run_one(
        "se-recovery",
        "Self name: D[n]x is equivalent to R[se]@[n]x (agent-specific)",
        [&] { check_se_recovery(options.seed); }));
    report.all_pass = true;
    for (const TheoremCheck& c : report.checks)
        report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace ego
