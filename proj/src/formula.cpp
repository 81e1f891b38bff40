#include "ego/formula.hpp"

#include <utility>

#include "ego/error.hpp"

namespace ego {

struct Formula::Node {
    FormulaKind kind;
    Prop prop;                     // Prop
    Name name;                     // At / DeRe / DeDicto
    std::shared_ptr<const Node> a; // unary child or left operand
    std::shared_ptr<const Node> b; // right operand of Or
    int size = 1;
};

namespace {

void require_name(const Name& n) {
    if (n.id.empty())
        throw Error("modal operator requires a nonempty name");
}

} // namespace

Formula Formula::True() {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::True;
    return Formula(std::move(n));
}

Formula Formula::False() {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::False;
    return Formula(std::move(n));
}

Formula Formula::P(Prop p) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Prop;
    n->prop = std::move(p);
    return Formula(std::move(n));
}

Formula Formula::Not(Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Not;
    n->size = 1 + f.node_->size;
    n->a = std::move(f.node_);
    return Formula(std::move(n));
}

Formula Formula::Or(Formula l, Formula r) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Or;
    n->size = 1 + l.node_->size + r.node_->size;
    n->a = std::move(l.node_);
    n->b = std::move(r.node_);
    return Formula(std::move(n));
}

Formula Formula::At(Name n, Formula f) {
    require_name(n);
    auto node = std::make_shared<Node>();
    node->kind = FormulaKind::At;
    node->name = std::move(n);
    node->size = 1 + f.node_->size;
    node->a = std::move(f.node_);
    return Formula(std::move(node));
}

Formula Formula::DeRe(Name n, Formula f) {
    require_name(n);
    auto node = std::make_shared<Node>();
    node->kind = FormulaKind::DeRe;
    node->name = std::move(n);
    node->size = 1 + f.node_->size;
    node->a = std::move(f.node_);
    return Formula(std::move(node));
}

Formula Formula::DeDicto(Name n, Formula f) {
    require_name(n);
    auto node = std::make_shared<Node>();
    node->kind = FormulaKind::DeDicto;
    node->name = std::move(n);
    node->size = 1 + f.node_->size;
    node->a = std::move(f.node_);
    return Formula(std::move(node));
}

Formula Formula::And(Formula l, Formula r) {
    return Not(Or(Not(std::move(l)), Not(std::move(r))));
}

Formula Formula::Implies(Formula l, Formula r) {
    return Or(Not(std::move(l)), std::move(r));
}

FormulaKind Formula::kind() const { return node_->kind; }

const Prop& Formula::prop() const {
    if (node_->kind != FormulaKind::Prop)
        throw Error("Formula::prop: not a propositional variable");
    return node_->prop;
}

const Name& Formula::name() const {
    switch (node_->kind) {
    case FormulaKind::At:
    case FormulaKind::DeRe:
    case FormulaKind::DeDicto:
        return node_->name;
    default:
        throw Error("Formula::name: not a modal formula");
    }
}

Formula Formula::child() const {
    if (!node_->a)
        throw Error("Formula::child: leaf formula");
    return Formula(node_->a);
}

Formula Formula::rhs() const {
    if (node_->kind != FormulaKind::Or)
        throw Error("Formula::rhs: not a disjunction");
    return Formula(node_->b);
}

int Formula::size() const { return node_->size; }

const void* Formula::node_key() const { return node_.get(); }

bool Formula::operator==(const Formula& other) const {
    const Node* x = node_.get();
    const Node* y = other.node_.get();
    if (x == y)
        return true;
    if (x->kind != y->kind || x->size != y->size)
        return false;
    switch (x->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
        return true;
    case FormulaKind::Prop:
        return x->prop == y->prop;
    case FormulaKind::Not:
        return Formula(x->a) == Formula(y->a);
    case FormulaKind::Or:
        return Formula(x->a) == Formula(y->a) && Formula(x->b) == Formula(y->b);
    case FormulaKind::At:
    case FormulaKind::DeRe:
    case FormulaKind::DeDicto:
        return x->name == y->name && Formula(x->a) == Formula(y->a);
    }
    return false;
}

namespace {

// Precedence: unary (!, R[.], D[.], @[.]) binds tighter than |, and | folds
// to the left. A unary operand that is itself a disjunction needs
// parentheses; so does the right operand of |.
void render(const Formula& f, std::string& out, bool parenthesize_or) {
    if (f.kind() == FormulaKind::Or && parenthesize_or) {
        out += '(';
        render(f, out, false);
        out += ')';
        return;
    }
    switch (f.kind()) {
    case FormulaKind::True:
        out += "true";
        break;
    case FormulaKind::False:
        out += "false";
        break;
    case FormulaKind::Prop:
        out += f.prop().id;
        break;
    case FormulaKind::Not:
        out += '!';
        render(f.child(), out, true);
        break;
    case FormulaKind::Or:
        render(f.child(), out, false);
        out += " | ";
        render(f.rhs(), out, true);
        break;
    case FormulaKind::At:
        out += "@[";
        out += f.name().id;
        out += "] ";
        render(f.child(), out, true);
        break;
    case FormulaKind::DeRe:
        out += "R[";
        out += f.name().id;
        out += "] ";
        render(f.child(), out, true);
        break;
    case FormulaKind::DeDicto:
        out += "D[";
        out += f.name().id;
        out += "] ";
        render(f.child(), out, true);
        break;
    }
}

} // namespace

std::string Formula::str() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(size()) * 4);
    render(*this, out, false);
    return out;
}

std::string print_formula(const Formula& f) { return f.str(); }

} // namespace ego
