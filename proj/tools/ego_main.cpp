// Command-line front-end: model checking, truth-set diagrams, closure and
// definability analysis, and the built-in reproduction suite.
//
// Exit codes everywhere: 0 affirmative verdict / success, 1 negative
// verdict (or failed checks), 2 usage or validation error.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "ego/certificate.hpp"
#include "ego/closure.hpp"
#include "ego/diagram.hpp"
#include "ego/error.hpp"
#include "ego/model.hpp"
#include "ego/model_json.hpp"
#include "ego/parse.hpp"
#include "ego/random.hpp"
#include "ego/semantics.hpp"
#include "ego/signature.hpp"
#include "ego/theorems.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

bool use_color() {
    return isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
}

std::string verdict_word(bool pass) {
    if (!use_color())
        return pass ? "PASS" : "FAIL";
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

int resolve_or_die(int idx, const std::string& kind, const std::string& id) {
    if (idx < 0)
        throw ego::Error("unknown " + kind + " \"" + id + "\"");
    return idx;
}

struct CheckArgs {
    std::string model_path;
    std::string formula;
    std::string world;
    std::string agent;
};

int cmd_check(const CheckArgs& args) {
    const ego::Model m = ego::load_model_file(args.model_path);
    const ego::Formula f = ego::parse_formula(args.formula);
    ego::require_evaluable(m, f);
    const ego::PointedQuery q{
        resolve_or_die(m.world_index(args.world), "world", args.world),
        resolve_or_die(m.agent_index(args.agent), "agent", args.agent)};
    const bool holds = ego::satisfies(m, q, f);
    std::cout << (holds ? "true" : "false") << "\n";
    return holds ? kExitTrue : kExitFalse;
}

struct TruthsetArgs {
    std::string model_path;
    std::string formula;
    std::string format = "text";
};

int cmd_truthset(const TruthsetArgs& args) {
    const ego::Model m = ego::load_model_file(args.model_path);
    const ego::Formula f = ego::parse_formula(args.formula);
    ego::require_evaluable(m, f);
    const ego::TruthSet t = ego::truth_set(m, f);
    if (args.format == "json") {
        json order = json::array();
        for (const std::string& w : m.worlds)
            for (const std::string& a : m.agents)
                order.push_back(w + ":" + a);
        const json doc = {{"order", std::move(order)},
                          {"bits", t.to_bit_string()}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << ego::render_diagram(m, t);
    }
    return kExitTrue;
}

struct EquivArgs {
    std::string model_path;
    std::string formula_a;
    std::string formula_b;
};

int cmd_equiv(const EquivArgs& args) {
    const ego::Model m = ego::load_model_file(args.model_path);
    const ego::Formula a = ego::parse_formula(args.formula_a);
    const ego::Formula b = ego::parse_formula(args.formula_b);
    ego::require_evaluable(m, a);
    ego::require_evaluable(m, b);
    const auto diff = ego::first_difference(m, a, b);
    if (!diff) {
        std::cout << "equivalent\n";
        return kExitTrue;
    }
    std::cout << "differ at (" << m.worlds[static_cast<std::size_t>(diff->world)]
              << "," << m.agents[static_cast<std::size_t>(diff->agent)] << ")\n";
    return kExitFalse;
}

struct ClosureArgs {
    std::string model_path;
    std::string sig_spec;
    std::string target;
    std::string out_path;
    std::string format = "text";
};

int cmd_closure(const ClosureArgs& args) {
    const ego::Model m = ego::load_model_file(args.model_path);
    const ego::Signature sig = ego::parse_signature(args.sig_spec);

    if (args.target.empty()) {
        if (!args.out_path.empty())
            throw ego::Error("--out requires --target (certificates carry a "
                             "definability verdict)");
        const ego::ClosureFamily family = ego::close(m, sig);
        if (args.format == "json") {
            json members = json::array();
            for (std::size_t i = 0; i < family.size(); ++i)
                members.push_back(
                    {{"bits", family.members()[i].to_bit_string()},
                     {"witness", family.witnesses()[i].str()}});
            const json doc = {{"signature", ego::signature_to_string(sig)},
                              {"family", std::move(members)}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "family size " << family.size() << "\n";
            for (std::size_t i = 0; i < family.size(); ++i)
                std::cout << "  " << family.members()[i].to_bit_string() << "  "
                          << family.witnesses()[i].str() << "\n";
        }
        return kExitTrue;
    }

    const ego::Formula target = ego::parse_formula(args.target);
    const ego::Certificate cert = ego::decide_definability(m, target, sig);
    if (!args.out_path.empty())
        ego::save_certificate_file(cert, args.out_path);
    if (args.format == "json") {
        std::cout << ego::certificate_to_json(cert).dump(2) << "\n";
    } else if (cert.definable) {
        std::cout << "DEFINABLE; witness " << cert.witness->str() << "\n";
    } else {
        std::cout << "UNDEFINABLE; family size " << cert.family->size() << "\n";
    }
    return cert.definable ? kExitTrue : kExitFalse;
}

struct VerifyArgs {
    bool as_json = false;
    std::uint64_t seed = 20240814;
    bool corrupt_fixture = false;
};

int cmd_verify_paper(const VerifyArgs& args) {
    ego::PaperCheckOptions options;
    options.seed = args.seed;
    options.corrupt_m_dr = args.corrupt_fixture;
    const ego::PaperReport report = ego::run_paper_checks(options);

    if (args.as_json) {
        json checks = json::array();
        for (const ego::TheoremCheck& c : report.checks)
            checks.push_back({{"id", c.id},
                              {"label", c.label},
                              {"pass", c.pass},
                              {"millis", c.millis},
                              {"detail", c.detail}});
        const json doc = {{"checks", std::move(checks)},
                          {"all_pass", report.all_pass}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const ego::TheoremCheck& c : report.checks) {
            std::cout << c.label << " ... " << verdict_word(c.pass) << " ["
                      << c.millis << " ms]\n";
            if (!c.pass)
                std::cout << "  failure: " << c.detail << "\n";
        }
        std::cout << (report.all_pass ? "all checks passed"
                                      : "some checks FAILED")
                  << "\n";
    }
    return report.all_pass ? kExitTrue : kExitFalse;
}

struct GenArgs {
    int worlds = 0;
    int agents = 0;
    int names = 0;
    int props = 0;
    std::string mode = "rigid";
    bool with_se = false;
    std::uint64_t seed = 0;
    std::string out_path;
};

int cmd_gen(const GenArgs& args) {
    ego::RandomModelParams params;
    params.n_worlds = args.worlds;
    params.n_agents = args.agents;
    params.n_names = args.names;
    params.n_props = args.props;
    if (args.mode == "rigid")
        params.mode = ego::Model::Mode::Rigid;
    else if (args.mode == "agent-specific")
        params.mode = ego::Model::Mode::AgentSpecific;
    else
        throw ego::Error("--mode must be rigid or agent-specific");
    params.with_se = args.with_se;
    const ego::Model m = ego::random_model(params, args.seed);
    if (args.out_path.empty())
        std::cout << ego::model_to_json(m).dump(2) << "\n";
    else
        ego::save_model_file(m, args.out_path);
    return kExitTrue;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"egocentric epistemic logic with nonrigid names: model "
                 "checking, truth-set algebra, definability certificates"};
    app.require_subcommand(1);

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand(
        "check", "evaluate a formula at a world/agent point");
    check->add_option("--model", check_args.model_path, "model JSON file")
        ->required();
    check->add_option("--world", check_args.world, "world id")->required();
    check->add_option("--agent", check_args.agent, "agent id")->required();
    check->add_option("formula", check_args.formula, "formula text")
        ->required();

    TruthsetArgs truthset_args;
    CLI::App* truthset = app.add_subcommand(
        "truthset", "print the truth set of a formula as a diagram");
    truthset->add_option("--model", truthset_args.model_path, "model JSON file")
        ->required();
    truthset
        ->add_option("--format", truthset_args.format,
                     "output format: text (grid) or json (bit string)")
        ->check(CLI::IsMember({"text", "json"}));
    truthset->add_option("formula", truthset_args.formula, "formula text")
        ->required();

    EquivArgs equiv_args;
    CLI::App* equiv = app.add_subcommand(
        "equiv", "decide semantic equivalence of two formulas on a model");
    equiv->add_option("--model", equiv_args.model_path, "model JSON file")
        ->required();
    equiv->add_option("formula_a", equiv_args.formula_a, "first formula")
        ->required();
    equiv->add_option("formula_b", equiv_args.formula_b, "second formula")
        ->required();

    ClosureArgs closure_args;
    CLI::App* closure = app.add_subcommand(
        "closure",
        "close the seed truth sets under a connective signature; with "
        "--target, decide definability and emit a certificate");
    closure->add_option("--model", closure_args.model_path, "model JSON file")
        ->required();
    closure
        ->add_option("--sig", closure_args.sig_spec,
                     "signature \"props;booleans;modalities\", e.g. "
                     "\"p;not,or;R[Ann],@[Ann]\"")
        ->required();
    closure->add_option("--target", closure_args.target,
                        "formula whose definability to decide");
    closure->add_option("--out", closure_args.out_path,
                        "write the certificate JSON here");
    closure
        ->add_option("--format", closure_args.format,
                     "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify-paper",
        "run the built-in reproduction suite for the definability theorems");
    verify->add_flag("--json", verify_args.as_json, "machine-readable report");
    verify->add_option("--seed", verify_args.seed,
                       "seed for the randomized parts");
    verify
        ->add_flag("--corrupt-fixture", verify_args.corrupt_fixture,
                   "fault-injection hook: perturb a fixture so a check fails")
        ->group(""); // hidden

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand(
        "gen", "generate a seeded random model and write it as JSON");
    gen->add_option("--worlds", gen_args.worlds, "number of worlds")->required();
    gen->add_option("--agents", gen_args.agents, "number of agents")->required();
    gen->add_option("--names", gen_args.names, "number of names");
    gen->add_option("--props", gen_args.props, "number of props");
    gen->add_option("--mode", gen_args.mode, "rigid or agent-specific")
        ->check(CLI::IsMember({"rigid", "agent-specific"}));
    gen->add_flag("--with-se", gen_args.with_se,
                  "declare the reserved self name (agent-specific only)");
    gen->add_option("--seed", gen_args.seed, "generator seed")->required();
    gen->add_option("--out", gen_args.out_path,
                    "output file (default: stdout)");

    try {
        app.parse(argc, argv);
        if (check->parsed())
            return cmd_check(check_args);
        if (truthset->parsed())
            return cmd_truthset(truthset_args);
        if (equiv->parsed())
            return cmd_equiv(equiv_args);
        if (closure->parsed())
            return cmd_closure(closure_args);
        if (verify->parsed())
            return cmd_verify_paper(verify_args);
        if (gen->parsed())
            return cmd_gen(gen_args);
        std::cerr << "error: no subcommand\n";
        return kExitError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    } catch (const ego::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
