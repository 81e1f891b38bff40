#ifndef EGO_SEMANTICS_HPP
#define EGO_SEMANTICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "ego/formula.hpp"
#include "ego/model.hpp"
#include "ego/truth_set.hpp"

namespace ego {

// One connective instance, with its name already resolved to a model index
// for the modal operators. Used by apply_op and the closure engine.
struct OpInstance {
    enum class Kind { Not, Or, At, DeRe, DeDicto };
    Kind kind;
    int name = -1; // modal kinds only

    int arity() const { return kind == Kind::Or ? 2 : 1; }
};

// Pointwise satisfaction at (world, agent). Direct recursion over the
// formula; deliberately independent of apply_op/truth_set so the two
// evaluation routes can check each other.
//
// Resolution of a name n used by agent a:
//   rigid:          the world's referent e_w(n), same for every agent;
//   agent-specific: e^a_w(n).
// R[n] fixes the referent at the evaluation world; D[n] re-resolves it at
// each indistinguishable world (by the same evaluating agent).
bool satisfies(const Model& m, PointedQuery q, const Formula& f);

// Truth-set transformer semantics of a single connective.
TruthSet apply_op(const Model& m, const OpInstance& op,
                  std::span<const TruthSet> args);

// Denotation of f on m, computed bottom-up through apply_op with one pass
// per subformula.
TruthSet truth_set(const Model& m, const Formula& f);

bool equivalent_on(const Model& m, const Formula& f, const Formula& g);

// First cell where the two formulas disagree, if any (row-major order).
std::optional<PointedQuery> first_difference(const Model& m, const Formula& f,
                                             const Formula& g);

// Checks that every name and prop of f is declared in m and that the se
// name is only used in agent-specific mode; throws otherwise.
void require_evaluable(const Model& m, const Formula& f);

} // namespace ego

#endif
