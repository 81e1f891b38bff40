#ifndef EGO_FORMULA_HPP
#define EGO_FORMULA_HPP

#include <compare>
#include <memory>
#include <string>

namespace ego {

// Names and propositional variables live in separate token spaces; each is an
// identifier of the form [A-Za-z_][A-Za-z0-9_]* that is not a keyword.
struct Name {
    std::string id;
    auto operator<=>(const Name&) const = default;
};

struct Prop {
    std::string id;
    auto operator<=>(const Prop&) const = default;
};

// The name that always denotes the evaluating agent. Only meaningful on
// agent-specific models; evaluation rejects it in rigid mode.
inline const std::string kSelfName = "se";

enum class FormulaKind {
    True,    // constant, primitive
    False,   // constant, primitive
    Prop,
    Not,
    Or,
    At,      // @[n] f : f holds of the referent of n at the current world
    DeRe,    // R[n] f : knowledge about the agent currently named n
    DeDicto, // D[n] f : knowledge about the name n
};

// Immutable formula tree with structural equality. The core connectives are
// the eight kinds above; And and Implies are parse-time sugar that expands to
// Not/Or, so every Formula value is already in core form. Copies share the
// tree and are safe to pass across threads.
class Formula {
public:
    static Formula True();
    static Formula False();
    static Formula P(Prop p);
    static Formula P(std::string id) { return P(Prop{std::move(id)}); }
    static Formula Not(Formula f);
    static Formula Or(Formula l, Formula r);
    static Formula At(Name n, Formula f);
    static Formula DeRe(Name n, Formula f);
    static Formula DeDicto(Name n, Formula f);

    // Derived forms. And(f,g) = !(!f | !g); Implies(f,g) = !f | g.
    static Formula And(Formula l, Formula r);
    static Formula Implies(Formula l, Formula r);

    FormulaKind kind() const;
    const Prop& prop() const;  // kind() == Prop
    const Name& name() const;  // kind() in {At, DeRe, DeDicto}
    Formula child() const;     // unary operand, or left operand of Or
    Formula rhs() const;       // kind() == Or

    // Number of AST nodes. Derived forms count expanded.
    int size() const;

    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    // Canonical rendering; parse_formula(str()) reproduces the same tree.
    // Also serves as the deterministic tie-break key for ordered enumeration.
    std::string str() const;

    // Identity of the underlying node; used as a memoization key.
    const void* node_key() const;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

std::string print_formula(const Formula& f);

} // namespace ego

#endif
