// Acceptance suite: runs every reproduction criterion at full scale and
// prints one PASS/FAIL line each. Exits 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_harness.hpp"
#include "ego/certificate.hpp"
#include "ego/closure.hpp"
#include "ego/enumerate.hpp"
#include "ego/model.hpp"
#include "ego/parse.hpp"
#include "ego/random.hpp"
#include "ego/search.hpp"
#include "ego/semantics.hpp"
#include "ego/signature.hpp"

using namespace ego;

namespace {

struct Failure {
    std::string what;
};

void check(bool ok, const std::string& what) {
    if (!ok)
        throw Failure{what};
}

TruthSet cells(const Model& m, std::initializer_list<std::pair<int, int>> pts) {
    TruthSet t(m.cell_count());
    for (auto [w, a] : pts)
        t.set(m.cell(w, a));
    return t;
}

std::set<std::string> bits_of(const std::vector<TruthSet>& sets) {
    std::set<std::string> out;
    for (const TruthSet& t : sets)
        out.insert(t.to_bit_string());
    return out;
}

std::set<std::string> boolean_four(const Model& m) {
    const TruthSet p = truth_set(m, parse_formula("p"));
    return {p.to_bit_string(), p.complement().to_bit_string(),
            TruthSet::none(m.cell_count()).to_bit_string(),
            TruthSet::all(m.cell_count()).to_bit_string()};
}

// --- criterion 1: fixture truth sets, bit-exact ---------------------------

void criterion_fixture_truth_sets() {
    const Model dr = fixture("M_DR");
    check(truth_set(dr, parse_formula("p")) ==
              cells(dr, {{0, 0}, {1, 1}, {2, 1}, {3, 0}}),
          "[[p]] on M_DR");
    check(truth_set(dr, parse_formula("D[Ann] p")) ==
              cells(dr, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}),
          "[[D[Ann]p]] on M_DR");
    const Model rd = fixture("M_RD");
    check(truth_set(rd, parse_formula("R[Ann] p")) ==
              cells(rd, {{0, 1}, {1, 1}}),
          "[[R[Ann]p]] on M_RD");
}

// --- criteria 2 and 3: the undefinability closures -------------------------

void criterion_undefinable(const std::string& fixture_id,
                           const std::string& sig_spec,
                           const std::string& target_text) {
    const Model m = fixture(fixture_id);
    const Signature sig = parse_signature(sig_spec);
    const ClosureFamily family = close(m, sig);
    check(family.size() == 4, "family size is " + std::to_string(family.size()) +
                                  ", expected 4");
    check(bits_of(family.members()) == boolean_four(m),
          "family differs from {[[p]],[[bot]],[[!p]],[[top]]}");
    const Certificate cert =
        decide_definability(m, parse_formula(target_text), sig);
    check(!cert.definable, target_text + " unexpectedly definable");
    check(verify_certificate(cert), "certificate failed re-verification");
}

// --- criterion 4: uniform definability of D through R and @ ----------------

void criterion_d_via_r_at() {
    for (const std::string& id : {"M_DR", "M_RD"}) {
        const Model m = fixture(id);
        for (const char* body_text : {"p", "!p", "R[Ann] p", "D[Ann] p"}) {
            const Formula body = parse_formula(body_text);
            for (const std::string& n : m.names)
                for (const std::string& n2 : m.names)
                    check(equivalent_on(
                              m, Formula::DeDicto(Name{n}, body),
                              Formula::DeRe(Name{n2},
                                            Formula::At(Name{n}, body))),
                          id + ": counterexample at " + body_text);
        }
    }
    std::mt19937_64 rng(1001);
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
                for (const std::string& n2 : m.names)
                    check(equivalent_on(
                              m, Formula::DeDicto(Name{n}, body),
                              Formula::DeRe(Name{n2},
                                            Formula::At(Name{n}, body))),
                          "violation in round " + std::to_string(round) +
                              " at " + body.str());
        }
    }
}

// --- criterion 5: agent-specific counterexample search ---------------------

void criterion_counterexample_search() {
    const auto start = std::chrono::steady_clock::now();
    const CounterexampleResult r =
        search_agent_specific_counterexample({4, 3}, 2027);
    const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    check(elapsed < 60, "search exceeded 60 s");
    check(r.found, "no witness found: " + r.message);
    check(!r.certificate->definable, "verdict is not undefinable");
    check(verify_certificate(*r.certificate),
          "certificate failed re-verification");

    const Model& m = *r.model;
    const Formula p = Formula::P("p");
    const Formula at_p = Formula::At(Name{"bf"}, p);
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
        check(r.certificate->family->contains(truth_set(m, f)),
              "family misses the denotation of " + f.str());
}

// --- criterion 6: the se equivalence ----------------------------------------

void criterion_se_equivalence() {
    std::mt19937_64 rng(66);
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
            for (const std::string& n : m.names)
                check(equivalent_on(m, Formula::DeDicto(Name{n}, body),
                                    Formula::DeRe(Name{kSelfName},
                                                  Formula::At(Name{n}, body))),
                      "violation in round " + std::to_string(round) + " at " +
                          body.str());
        }
    }
}

// --- criterion 7: oracle agreement ------------------------------------------

void criterion_oracle_agreement() {
    const Model dr = fixture("M_DR");
    const Signature sig_dr = parse_signature("p;not,or;R[Ann]");
    check(bits_of(oracle_family(dr, sig_dr, 5)) ==
              bits_of(close(dr, sig_dr).members()),
          "oracle misses the closure on M_DR");

    const Model rd = fixture("M_RD");
    const Signature sig_rd = parse_signature("p;not,or;D[Ann],@[Ann]");
    check(bits_of(oracle_family(rd, sig_rd, 5)) ==
              bits_of(close(rd, sig_rd).members()),
          "oracle misses the closure on M_RD");

    std::mt19937_64 rng(700);
    for (int round = 0; round < 100; ++round) {
        RandomModelParams params;
        params.n_worlds = 1 + static_cast<int>(uniform_below(rng, 3));
        params.n_agents = 1 + static_cast<int>(uniform_below(rng, 2));
        params.n_names = 1;
        params.n_props = 1;
        const Model m = random_model(params, rng);
        Signature sig;
        sig.props = {Prop{m.props[0]}};
        sig.allow_not = true;
        sig.allow_or = true;
        sig.at_names = {Name{m.names[0]}};
        sig.dere_names = {Name{m.names[0]}};
        sig.dedicto_names = {Name{m.names[0]}};
        const ClosureFamily family = close(m, sig);
        for (const TruthSet& t : oracle_family(m, sig, 5))
            check(family.contains(t),
                  "oracle produced a set outside the closure, round " +
                      std::to_string(round));
    }
}

// --- criterion 8: the two evaluation routes agree ---------------------------

void criterion_semantics_cross_check() {
    std::mt19937_64 rng(88);
    long triples = 0;
    while (triples < 100000) {
        RandomModelParams params;
        params.mode = uniform_below(rng, 2) ? Model::Mode::AgentSpecific
                                            : Model::Mode::Rigid;
        params.with_se = params.mode == Model::Mode::AgentSpecific &&
                         uniform_below(rng, 2) == 0;
        params.n_worlds = 1 + static_cast<int>(uniform_below(rng, 4));
        params.n_agents = 1 + static_cast<int>(uniform_below(rng, 3));
        params.n_names = 1 + static_cast<int>(uniform_below(rng, 2));
        params.n_props = 1 + static_cast<int>(uniform_below(rng, 2));
        const Model m = random_model(params, rng);
        for (int i = 0; i < 8; ++i) {
            const Formula f = random_formula(rng, m, 10);
            const TruthSet t = truth_set(m, f);
            for (int j = 0; j < 5; ++j) {
                const PointedQuery q{
                    static_cast<int>(uniform_below(rng, m.worlds.size())),
                    static_cast<int>(uniform_below(rng, m.agents.size()))};
                check(satisfies(m, q, f) == t.test(m.cell(q.world, q.agent)),
                      "routes disagree at " + f.str());
                ++triples;
            }
        }
    }
}

// --- criterion 9: validity properties ----------------------------------------

void criterion_validity_properties() {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 1000; ++round) {
        RandomModelParams params;
        params.n_worlds = 1 + static_cast<int>(uniform_below(rng, 5));
        params.n_agents = 1 + static_cast<int>(uniform_below(rng, 4));
        params.n_names = 1 + static_cast<int>(uniform_below(rng, 2));
        params.n_props = 1 + static_cast<int>(uniform_below(rng, 2));
        const Model m = random_model(params, rng);
        const Name n{m.names[0]};
        const Formula f = random_formula(rng, m, 8);
        const Formula g = random_formula(rng, m, 8);
        const std::string where = " (round " + std::to_string(round) + ")";

        const TruthSet at_f = truth_set(m, Formula::At(n, f));
        check(truth_set(m, Formula::DeRe(n, f)).subset_of(at_f),
              "R f -> @ f fails" + where);
        check(truth_set(m, Formula::DeDicto(n, f)).subset_of(at_f),
              "D f -> @ f fails" + where);

        for (auto make : {&Formula::DeRe, &Formula::DeDicto})
            check(truth_set(m, make(n, Formula::Implies(f, g)))
                      .intersect(truth_set(m, make(n, f)))
                      .subset_of(truth_set(m, make(n, g))),
                  "K-distribution fails" + where);

        const Formula sup = Formula::Or(f, g);
        check(truth_set(m, Formula::DeRe(n, f))
                  .subset_of(truth_set(m, Formula::DeRe(n, sup))),
              "R monotonicity fails" + where);
        check(truth_set(m, Formula::DeDicto(n, f))
                  .subset_of(truth_set(m, Formula::DeDicto(n, sup))),
              "D monotonicity fails" + where);
        check(at_f.subset_of(truth_set(m, Formula::At(n, sup))),
              "@ monotonicity fails" + where);

        // Rigid mode: @ ignores the evaluating agent and is idempotent.
        for (std::size_t w = 0; w < m.worlds.size(); ++w)
            for (std::size_t a = 1; a < m.agents.size(); ++a)
                check(at_f.test(m.cell(static_cast<int>(w), 0)) ==
                          at_f.test(m.cell(static_cast<int>(w),
                                           static_cast<int>(a))),
                      "@ depends on the agent in rigid mode" + where);
        check(truth_set(m, Formula::At(n, Formula::At(n, f))) == at_f,
              "@ idempotence fails in rigid mode" + where);
    }

    // Agent-specific mode must violate @-idempotence somewhere.
    int violations = 0;
    for (int round = 0; round < 1000 && violations == 0; ++round) {
        RandomModelParams params;
        params.mode = Model::Mode::AgentSpecific;
        params.n_worlds = 1 + static_cast<int>(uniform_below(rng, 5));
        params.n_agents = 1 + static_cast<int>(uniform_below(rng, 4));
        params.n_names = 1;
        params.n_props = 1;
        const Model m = random_model(params, rng);
        const Name n{m.names[0]};
        const Formula p = Formula::P(m.props[0]);
        if (truth_set(m, Formula::At(n, Formula::At(n, p))) !=
            truth_set(m, Formula::At(n, p)))
            ++violations;
    }
    check(violations > 0,
          "no agent-specific @-idempotence violation in 1000 models");
}

// --- criterion 10: the CLI reproduction command ------------------------------

void criterion_cli_verify_paper() {
    const auto r = ego_tests::run_cli({"verify-paper"});
    check(r.exit_code == 0, "verify-paper exited with " +
                                std::to_string(r.exit_code) + "\n" + r.out);
    for (const char* needle :
         {"Theorem 1", "Theorem 3", "Theorem 4", "Theorem 5"}) {
        bool pass_line = false;
        std::istringstream lines(r.out);
        std::string line;
        while (std::getline(lines, line))
            if (line.find(needle) != std::string::npos &&
                line.find("PASS") != std::string::npos)
                pass_line = true;
        check(pass_line, std::string("missing PASS line for ") + needle);
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {"1. fixture truth sets are bit-exact", criterion_fixture_truth_sets},
        {"2. D[Ann]p undefinable over {not,or,R[Ann]} on M_DR",
         [] { criterion_undefinable("M_DR", "p;not,or;R[Ann]", "D[Ann] p"); }},
        {"3. R[Ann]p undefinable over {not,or,D[Ann],@[Ann]} on M_RD",
         [] {
             criterion_undefinable("M_RD", "p;not,or;D[Ann],@[Ann]",
                                   "R[Ann] p");
         }},
        {"4. D[n]x equals R[m]@[n]x on rigid models (fixtures + fuzz)",
         criterion_d_via_r_at},
        {"5. agent-specific counterexample search yields a verified witness",
         criterion_counterexample_search},
        {"6. D[n]x equals R[se]@[n]x on agent-specific models with se",
         criterion_se_equivalence},
        {"7. enumeration oracle agrees with the closure engine",
         criterion_oracle_agreement},
        {"8. pointwise and truth-set evaluation agree on 1e5 triples",
         criterion_semantics_cross_check},
        {"9. validity properties hold; agent-specific @@ deviates",
         criterion_validity_properties},
        {"10. ego verify-paper passes end to end", criterion_cli_verify_paper},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = true;
        try {
            c.body();
        } catch (const Failure& f) {
            pass = false;
            detail = f.what;
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << ms
                  << " ms]\n";
        if (!pass) {
            std::cout << "      " << detail << "\n";
            ++failures;
        }
    }
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria FAILED\n";
    return 1;
}
