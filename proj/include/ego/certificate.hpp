#ifndef EGO_CERTIFICATE_HPP
#define EGO_CERTIFICATE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "ego/closure.hpp"
#include "ego/formula.hpp"
#include "ego/model.hpp"
#include "ego/signature.hpp"

namespace ego {

// Self-contained definability verdict for one (model, signature, target).
//
// definable:   witness uses only signature connectives and denotes the same
//              set as the target.
// undefinable: family is the saturated closure of the signature seeds and
//              the target's denotation is not a member. One such model
//              settles the general undefinability question (no formula over
//              the signature can match the target anywhere), whereas a
//              definable verdict only speaks about this model.
struct Certificate {
    Model model;
    Signature signature;
    Formula target;
    TruthSet target_set;
    bool definable = false;
    std::optional<Formula> witness;        // definable
    std::optional<ClosureFamily> family;   // undefinable
};

Certificate decide_definability(const Model& m, const Formula& target,
                                const Signature& sig);

// Re-checks every certificate invariant from scratch, using only the
// pointwise satisfaction relation (never apply_op): model validity, target
// denotation, witness soundness and signature-membership, seed membership,
// full saturation, and target exclusion. Returns false on the first broken
// invariant.
bool verify_certificate(const Certificate& c);

// Certificate document:
//   { "order": ["w:a", ...], "model": {...}, "signature": "p;not,or;R[Ann]",
//     "target": "D[Ann] p", "target_bits": "0101...",
//     "verdict": "definable" | "undefinable",
//     "witness": "..."?,                      (definable)
//     "family": [{"bits": "...", "witness": "..."}]? }   (undefinable)
// "order" documents the row-major bit numbering of every bit string.
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& doc);

void save_certificate_file(const Certificate& c, const std::string& path);
Certificate load_certificate_file(const std::string& path);

} // namespace ego

#endif
