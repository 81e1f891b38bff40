#ifndef EGO_CLOSURE_HPP
#define EGO_CLOSURE_HPP

#include <optional>
#include <unordered_map>
#include <vector>

#include "ego/formula.hpp"
#include "ego/model.hpp"
#include "ego/semantics.hpp"
#include "ego/signature.hpp"
#include "ego/truth_set.hpp"

namespace ego {

// A family of truth sets closed (when saturated) under the signature's
// connectives, with one witness formula per member. Members are kept in the
// order the closure settled them, which is deterministic: nondecreasing
// witness size, ties by the witness's canonical rendering.
class ClosureFamily {
public:
    ClosureFamily(Signature sig, std::vector<TruthSet> members,
                  std::vector<Formula> witnesses, bool saturated);

    const Signature& signature() const { return signature_; }
    const std::vector<TruthSet>& members() const { return members_; }
    const std::vector<Formula>& witnesses() const { return witnesses_; }
    bool saturated() const { return saturated_; }

    std::size_t size() const { return members_.size(); }
    bool contains(const TruthSet& t) const;
    // Index of t among members, or nullopt.
    std::optional<std::size_t> index_of(const TruthSet& t) const;
    const Formula& witness_for(const TruthSet& t) const;

private:
    Signature signature_;
    std::vector<TruthSet> members_;
    std::vector<Formula> witnesses_;
    bool saturated_ = false;
    std::unordered_map<TruthSet, std::size_t, TruthSet::Hash> index_;
};

// Enabled connective instances of sig resolved against m, in the fixed
// order: not, @ names, R names, D names, then or. Throws if the signature
// mentions names or props the model does not declare.
std::vector<OpInstance> signature_ops(const Model& m, const Signature& sig);

// Least family of truth sets that contains the seeds (each prop's
// denotation, plus the constants when enabled) and is closed under the
// enabled connectives read as truth-set transformers. Worklist fixed point
// settling sets in order of minimal witness size; each member's witness is
// the first, canonically smallest formula of that minimal size the worklist
// produced for it.
ClosureFamily close(const Model& m, const Signature& sig);

// {denotation of f : f enumerated over sig up to max_size}, deduplicated,
// in first-appearance order. Independent route to the same family: grows
// toward close(m, sig).members() and equals it once max_size reaches the
// saturation depth.
std::vector<TruthSet> oracle_family(const Model& m, const Signature& sig,
                                    int max_size);

} // namespace ego

#endif
