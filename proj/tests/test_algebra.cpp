#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ego/certificate.hpp"
#include "ego/closure.hpp"
#include "ego/enumerate.hpp"
#include "ego/error.hpp"
#include "ego/model.hpp"
#include "ego/parse.hpp"
#include "ego/random.hpp"
#include "ego/semantics.hpp"

using namespace ego;

namespace {

std::set<std::string> member_bits(const std::vector<TruthSet>& members) {
    std::set<std::string> out;
    for (const TruthSet& t : members)
        out.insert(t.to_bit_string());
    return out;
}

std::set<std::string> boolean_four(const Model& m) {
    const TruthSet p = truth_set(m, parse_formula("p"));
    return {p.to_bit_string(), p.complement().to_bit_string(),
            TruthSet::none(m.cell_count()).to_bit_string(),
            TruthSet::all(m.cell_count()).to_bit_string()};
}

} // namespace

TEST_CASE("closure reproduces the four-set families") {
    const Model dr = fixture("M_DR");
    SUBCASE("de re alone adds nothing beyond the Boolean closure") {
        const ClosureFamily fam = close(dr, parse_signature("p;not,or;R[Ann]"));
        CHECK(fam.saturated());
        CHECK(member_bits(fam.members()) == boolean_four(dr));
    }
    SUBCASE("pure Boolean closure of one nontrivial set") {
        const ClosureFamily fam = close(dr, parse_signature("p;not,or;"));
        CHECK(member_bits(fam.members()) == boolean_four(dr));
    }
    SUBCASE("de dicto and @ add nothing on the two-world fixture") {
        const Model rd = fixture("M_RD");
        const ClosureFamily fam =
            close(rd, parse_signature("p;not,or;D[Ann],@[Ann]"));
        CHECK(member_bits(fam.members()) == boolean_four(rd));
    }
    SUBCASE("de dicto on the four-world fixture reaches its denotation") {
        const ClosureFamily fam = close(dr, parse_signature("p;not,or;D[Ann]"));
        CHECK(fam.contains(truth_set(dr, parse_formula("D[Ann] p"))));
    }
}

TEST_CASE("closure is deterministic, saturated, and witness-sound") {
    const Model dr = fixture("M_DR");
    const Signature sig = parse_signature("p;not,or;R[Ann],@[Ann],D[Ann]");
    const ClosureFamily a = close(dr, sig);
    const ClosureFamily b = close(dr, sig);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a.members()[i] == b.members()[i]);
        CHECK(a.witnesses()[i] == b.witnesses()[i]);
    }
    // Witness soundness and signature membership.
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(truth_set(dr, a.witnesses()[i]) == a.members()[i]);
        CHECK(formula_in_signature(a.witnesses()[i], sig));
    }
    // Saturation, checked exhaustively through apply_op.
    for (const OpInstance& op : signature_ops(dr, sig)) {
        if (op.arity() == 1) {
            for (const TruthSet& t : a.members()) {
                const TruthSet args[] = {t};
                CHECK(a.contains(apply_op(dr, op, args)));
            }
        } else {
            for (const TruthSet& s : a.members())
                for (const TruthSet& t : a.members()) {
                    const TruthSet args[] = {s, t};
                    CHECK(a.contains(apply_op(dr, op, args)));
                }
        }
    }
}

TEST_CASE("witnesses are size-minimal") {
    const Model dr = fixture("M_DR");
    const Signature sig = parse_signature("p;not,or;R[Ann]");
    const ClosureFamily fam = close(dr, sig);
    // Oracle: no strictly smaller formula over sig denotes the member.
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const int wit_size = fam.witnesses()[i].size();
        for (const Formula& f : enumerate_formulas(sig, wit_size - 1))
            CHECK(truth_set(dr, f) != fam.members()[i]);
    }
    // The seed keeps its one-node witness.
    CHECK(fam.witness_for(truth_set(dr, parse_formula("p"))) ==
          parse_formula("p"));
}

TEST_CASE("definability decisions on the fixtures") {
    const Model dr = fixture("M_DR");
    const Model rd = fixture("M_RD");

    SUBCASE("de dicto is outside the de re closure") {
        const Certificate c = decide_definability(
            dr, parse_formula("D[Ann] p"), parse_signature("p;not,or;R[Ann]"));
        CHECK(!c.definable);
        REQUIRE(c.family.has_value());
        CHECK(c.family->size() == 4);
        CHECK(verify_certificate(c));
    }
    SUBCASE("de re is outside the de dicto/@ closure") {
        const Certificate c =
            decide_definability(rd, parse_formula("R[Ann] p"),
                                parse_signature("p;not,or;D[Ann],@[Ann]"));
        CHECK(!c.definable);
        REQUIRE(c.family.has_value());
        CHECK(c.family->size() == 4);
        TruthSet expected(rd.cell_count());
        expected.set(rd.cell(0, 1));
        expected.set(rd.cell(1, 1));
        CHECK(c.target_set == expected);
        CHECK(!c.family->contains(expected));
        CHECK(verify_certificate(c));
    }
    SUBCASE("de dicto becomes definable once @ joins de re") {
        const Certificate c = decide_definability(
            dr, parse_formula("D[Ann] p"),
            parse_signature("p;not,or;R[Ann],@[Ann]"));
        CHECK(c.definable);
        REQUIRE(c.witness.has_value());
        CHECK(truth_set(dr, *c.witness) == c.target_set);
        // The schema witness is also valid, even if not the minimal one.
        CHECK(equivalent_on(dr, parse_formula("R[Ann] @[Ann] p"),
                            parse_formula("D[Ann] p")));
        CHECK(verify_certificate(c));
    }
}

TEST_CASE("verify_certificate rejects tampered artifacts") {
    const Model dr = fixture("M_DR");
    const Certificate good = decide_definability(
        dr, parse_formula("D[Ann] p"), parse_signature("p;not,or;R[Ann]"));
    REQUIRE(verify_certificate(good));

    SUBCASE("dropping a member breaks saturation or seeds") {
        Certificate bad = good;
        std::vector<TruthSet> members(bad.family->members().begin(),
                                      bad.family->members().end() - 1);
        std::vector<Formula> witnesses(bad.family->witnesses().begin(),
                                       bad.family->witnesses().end() - 1);
        bad.family = ClosureFamily(bad.signature, members, witnesses, true);
        CHECK(!verify_certificate(bad));
    }
    SUBCASE("a wrong witness is caught") {
        Certificate bad = good;
        std::vector<TruthSet> members = bad.family->members();
        std::vector<Formula> witnesses = bad.family->witnesses();
        witnesses[0] = parse_formula("!p"); // denotes some other member
        bad.family = ClosureFamily(bad.signature, members, witnesses, true);
        CHECK(!verify_certificate(bad));
    }
    SUBCASE("a witness outside the signature is caught") {
        Certificate bad = good;
        std::vector<TruthSet> members = bad.family->members();
        std::vector<Formula> witnesses = bad.family->witnesses();
        // Swap the empty set's witness for an equivalent one that uses D.
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i].empty_set())
                witnesses[i] = parse_formula("D[Ann] p & !D[Ann] p");
        bad.family = ClosureFamily(bad.signature, members, witnesses, true);
        CHECK(!verify_certificate(bad));
    }
    SUBCASE("a definable verdict with a broken witness is caught") {
        Certificate c = decide_definability(
            dr, parse_formula("D[Ann] p"),
            parse_signature("p;not,or;R[Ann],@[Ann]"));
        REQUIRE(c.definable);
        c.witness = parse_formula("p");
        CHECK(!verify_certificate(c));
    }
    SUBCASE("a mislabeled target set is caught") {
        Certificate bad = good;
        bad.target_set = TruthSet::none(dr.cell_count());
        CHECK(!verify_certificate(bad));
    }
}

TEST_CASE("certificate JSON round-trips and re-verifies") {
    const Model dr = fixture("M_DR");
    for (const char* sig_spec : {"p;not,or;R[Ann]", "p;not,or;R[Ann],@[Ann]"}) {
        const Certificate c = decide_definability(
            dr, parse_formula("D[Ann] p"), parse_signature(sig_spec));
        const Certificate back = certificate_from_json(certificate_to_json(c));
        CHECK(back.definable == c.definable);
        CHECK(back.target == c.target);
        CHECK(back.target_set == c.target_set);
        CHECK(verify_certificate(back));
    }
}

TEST_CASE("the enumeration oracle agrees with the closure engine") {
    const Model dr = fixture("M_DR");
    const Model rd = fixture("M_RD");

    const Signature sig_dr = parse_signature("p;not,or;R[Ann]");
    CHECK(member_bits(oracle_family(dr, sig_dr, 6)) ==
          member_bits(close(dr, sig_dr).members()));

    const Signature sig_rd = parse_signature("p;not,or;D[Ann],@[Ann]");
    CHECK(member_bits(oracle_family(rd, sig_rd, 6)) ==
          member_bits(close(rd, sig_rd).members()));
    // R[Ann] p stays outside the enumerated family too.
    const TruthSet r_p = truth_set(rd, parse_formula("R[Ann] p"));
    for (const TruthSet& t : oracle_family(rd, sig_rd, 6))
        CHECK(t != r_p);

    SUBCASE("oracle is always a subset of the closure") {
        std::mt19937_64 rng(500);
        for (int round = 0; round < 30; ++round) {
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
            const ClosureFamily fam = close(m, sig);
            for (const TruthSet& t : oracle_family(m, sig, 5))
                CHECK(fam.contains(t));
        }
    }

    SUBCASE("trivial oracle case") {
        Signature only_p;
        only_p.props = {Prop{"p"}};
        const auto sets = oracle_family(dr, only_p, 1);
        REQUIRE(sets.size() == 1);
        CHECK(sets[0] == truth_set(dr, parse_formula("p")));
    }
}

TEST_CASE("closure rejects signatures that mention undeclared symbols") {
    const Model dr = fixture("M_DR");
    CHECK_THROWS_AS(close(dr, parse_signature("q;not,or;")), Error);
    CHECK_THROWS_AS(close(dr, parse_signature("p;;R[Zoe]")), Error);
    CHECK_THROWS_AS(decide_definability(dr, parse_formula("p"),
                                        parse_signature(";;R[Ann]")),
                    Error);
}
