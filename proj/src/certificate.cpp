#include "ego/certificate.hpp"

#include <fstream>

#include "ego/error.hpp"
#include "ego/model_json.hpp"
#include "ego/parse.hpp"
#include "ego/semantics.hpp"

namespace ego {

using nlohmann::json;

Certificate decide_definability(const Model& m, const Formula& target,
                                const Signature& sig) {
    require_evaluable(m, target);
    if (!sig.has_seed())
        throw Error("decide_definability: signature has no seeds "
                    "(add a prop or enable the constants)");
    ClosureFamily family = close(m, sig);
    TruthSet target_set = truth_set(m, target);

    Certificate c{m, sig, target, target_set, false, std::nullopt, std::nullopt};
    if (family.contains(target_set)) {
        c.definable = true;
        c.witness = family.witness_for(target_set);
    } else {
        c.family = std::move(family);
    }
    return c;
}

namespace {

// Denotation computed cell by cell through satisfies; the verification
// route must not share code with apply_op/truth_set.
TruthSet pointwise_denotation(const Model& m, const Formula& f) {
    TruthSet t(m.cell_count());
    const int n_worlds = static_cast<int>(m.worlds.size());
    const int n_agents = static_cast<int>(m.agents.size());
    for (int w = 0; w < n_worlds; ++w)
        for (int a = 0; a < n_agents; ++a)
            if (satisfies(m, {w, a}, f))
                t.set(m.cell(w, a));
    return t;
}

bool verify_undefinable(const Certificate& c) {
    const ClosureFamily& family = *c.family;
    if (!family.saturated())
        return false;
    if (family.size() == 0)
        return false;
    if (family.contains(c.target_set))
        return false;

    // Witness soundness and signature membership for every member.
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Formula& w = family.witnesses()[i];
        if (!formula_in_signature(w, c.signature))
            return false;
        if (pointwise_denotation(c.model, w) != family.members()[i])
            return false;
    }

    // Seeds: each prop denotation, and the constants when enabled.
    for (const Prop& p : c.signature.props)
        if (!family.contains(pointwise_denotation(c.model, Formula::P(p))))
            return false;
    if (c.signature.allow_consts) {
        if (!family.contains(pointwise_denotation(c.model, Formula::True())))
            return false;
        if (!family.contains(pointwise_denotation(c.model, Formula::False())))
            return false;
    }

    // Saturation: applying any enabled connective to members stays inside.
    // Connectives are applied syntactically to the member witnesses so the
    // whole check runs through satisfies.
    const Signature& sig = c.signature;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Formula& w = family.witnesses()[i];
        std::vector<Formula> images;
        if (sig.allow_not)
            images.push_back(Formula::Not(w));
        for (const Name& n : sig.at_names)
            images.push_back(Formula::At(n, w));
        for (const Name& n : sig.dere_names)
            images.push_back(Formula::DeRe(n, w));
        for (const Name& n : sig.dedicto_names)
            images.push_back(Formula::DeDicto(n, w));
        if (sig.allow_or)
            for (std::size_t j = 0; j < family.size(); ++j)
                images.push_back(Formula::Or(w, family.witnesses()[j]));
        for (const Formula& img : images)
            if (!family.contains(pointwise_denotation(c.model, img)))
                return false;
    }
    return true;
}

} // namespace

bool verify_certificate(const Certificate& c) {
    try {
        if (!validate_model(c.model).empty())
            return false;
        require_evaluable(c.model, c.target);
        if (c.target_set.size() != c.model.cell_count())
            return false;
        if (pointwise_denotation(c.model, c.target) != c.target_set)
            return false;

        if (c.definable) {
            if (!c.witness || c.family)
                return false;
            if (!formula_in_signature(*c.witness, c.signature))
                return false;
            return pointwise_denotation(c.model, *c.witness) == c.target_set;
        }
        if (!c.family || c.witness)
            return false;
        return verify_undefinable(c);
    } catch (const Error&) {
        return false;
    }
}

json certificate_to_json(const Certificate& c) {
    json doc;
    json order = json::array();
    for (const std::string& w : c.model.worlds)
        for (const std::string& a : c.model.agents)
            order.push_back(w + ":" + a);
    doc["order"] = std::move(order);
    doc["model"] = model_to_json(c.model);
    doc["signature"] = signature_to_string(c.signature);
    doc["target"] = c.target.str();
    doc["target_bits"] = c.target_set.to_bit_string();
    doc["verdict"] = c.definable ? "definable" : "undefinable";
    if (c.definable) {
        doc["witness"] = c.witness->str();
    } else {
        json family = json::array();
        for (std::size_t i = 0; i < c.family->size(); ++i)
            family.push_back(
                {{"bits", c.family->members()[i].to_bit_string()},
                 {"witness", c.family->witnesses()[i].str()}});
        doc["family"] = std::move(family);
    }
    return doc;
}

Certificate certificate_from_json(const json& doc) {
    try {
        if (!doc.is_object())
            throw Error("certificate: document must be a JSON object");
        for (const char* key :
             {"order", "model", "signature", "target", "target_bits", "verdict"})
            if (!doc.contains(key))
                throw Error("certificate: missing key \"" + std::string(key) +
                            "\"");

        Model m = model_from_json(doc.at("model"));
        Signature sig = parse_signature(doc.at("signature").get<std::string>());
        Formula target = parse_formula(doc.at("target").get<std::string>());
        TruthSet target_set =
            TruthSet::from_bit_string(doc.at("target_bits").get<std::string>());
        const std::string verdict = doc.at("verdict").get<std::string>();

        Certificate c{std::move(m), std::move(sig), target, target_set,
                      false,        std::nullopt,   std::nullopt};
        if (verdict == "definable") {
            c.definable = true;
            c.witness = parse_formula(doc.at("witness").get<std::string>());
        } else if (verdict == "undefinable") {
            std::vector<TruthSet> members;
            std::vector<Formula> witnesses;
            for (const json& entry : doc.at("family")) {
                members.push_back(TruthSet::from_bit_string(
                    entry.at("bits").get<std::string>()));
                witnesses.push_back(
                    parse_formula(entry.at("witness").get<std::string>()));
            }
            c.family = ClosureFamily(c.signature, std::move(members),
                                     std::move(witnesses), true);
        } else {
            throw Error("certificate: verdict must be definable/undefinable");
        }
        return c;
    } catch (const json::exception& e) {
        throw Error(std::string("certificate: malformed document: ") + e.what());
    }
}

void save_certificate_file(const Certificate& c, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write certificate file \"" + path + "\"");
    out << certificate_to_json(c).dump(2) << "\n";
}

Certificate load_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open certificate file \"" + path + "\"");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("certificate file \"" + path + "\": " + e.what());
    }
    return certificate_from_json(doc);
}

} // namespace ego
