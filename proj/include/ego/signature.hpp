#ifndef EGO_SIGNATURE_HPP
#define EGO_SIGNATURE_HPP

#include <string>
#include <vector>

#include "ego/formula.hpp"

namespace ego {

// The connectives available during closure and enumeration. Modalities are
// instantiated per name: enabling R[Ann] says nothing about R[Zoe]. The
// true/false constants are seeds only when allow_consts is set.
struct Signature {
    bool allow_not = false;
    bool allow_or = false;
    bool allow_consts = false;
    std::vector<Name> at_names;
    std::vector<Name> dere_names;
    std::vector<Name> dedicto_names;
    std::vector<Prop> props;

    // Sorts and dedupes the name/prop lists; call after manual construction.
    void normalize();

    // At least one seed (prop or enabled constant) is required for closure
    // and enumeration to have a nonempty base.
    bool has_seed() const { return allow_consts || !props.empty(); }

    bool operator==(const Signature&) const = default;
};

// True iff f is built from signature connectives and seeds only.
bool formula_in_signature(const Formula& f, const Signature& sig);

// Mini-syntax "props;booleans;modalities", e.g. "p,q;not,or;R[Ann],@[Ann]".
// The first field lists props and may include the tokens true/false to
// enable the constants; the second lists "not"/"or"; the third lists
// modality instances R[name], D[name], @[name]. Fields may be empty.
Signature parse_signature(const std::string& spec);

std::string signature_to_string(const Signature& sig);

} // namespace ego

#endif
