#include "ego/semantics.hpp"

#include <unordered_map>

#include "ego/error.hpp"

namespace ego {

namespace {

int resolve_name(const Model& m, const Name& n) {
    if (m.mode == Model::Mode::Rigid && n.id == kSelfName)
        throw Error("name \"se\" cannot be used on a rigid model");
    const int idx = m.name_index(n.id);
    if (idx < 0)
        throw Error("undeclared name \"" + n.id + "\"");
    return idx;
}

int resolve_prop(const Model& m, const Prop& p) {
    const int idx = m.prop_index(p.id);
    if (idx < 0)
        throw Error("undeclared prop \"" + p.id + "\"");
    return idx;
}

} // namespace

void require_evaluable(const Model& m, const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
        return;
    case FormulaKind::Prop:
        resolve_prop(m, f.prop());
        return;
    case FormulaKind::Not:
        require_evaluable(m, f.child());
        return;
    case FormulaKind::Or:
        require_evaluable(m, f.child());
        require_evaluable(m, f.rhs());
        return;
    case FormulaKind::At:
    case FormulaKind::DeRe:
    case FormulaKind::DeDicto:
        resolve_name(m, f.name());
        require_evaluable(m, f.child());
        return;
    }
}

bool satisfies(const Model& m, PointedQuery q, const Formula& f) {
    if (q.world < 0 || static_cast<std::size_t>(q.world) >= m.worlds.size())
        throw Error("satisfies: world index out of range");
    if (q.agent < 0 || static_cast<std::size_t>(q.agent) >= m.agents.size())
        throw Error("satisfies: agent index out of range");
    switch (f.kind()) {
    case FormulaKind::True:
        return true;
    case FormulaKind::False:
        return false;
    case FormulaKind::Prop: {
        const int p = resolve_prop(m, f.prop());
        return m.valuation[static_cast<std::size_t>(p)].test(
            m.cell(q.world, q.agent));
    }
    case FormulaKind::Not:
        return !satisfies(m, q, f.child());
    case FormulaKind::Or:
        return satisfies(m, q, f.child()) || satisfies(m, q, f.rhs());
    case FormulaKind::At: {
        const int n = resolve_name(m, f.name());
        return satisfies(m, {q.world, m.referent(q.world, q.agent, n)},
                         f.child());
    }
    case FormulaKind::DeRe: {
        const int n = resolve_name(m, f.name());
        const int ref = m.referent(q.world, q.agent, n);
        const Formula body = f.child();
        for (int u : m.block_of(q.agent, q.world))
            if (!satisfies(m, {u, ref}, body))
                return false;
        return true;
    }
    case FormulaKind::DeDicto: {
        const int n = resolve_name(m, f.name());
        const Formula body = f.child();
        for (int u : m.block_of(q.agent, q.world))
            if (!satisfies(m, {u, m.referent(u, q.agent, n)}, body))
                return false;
        return true;
    }
    }
    throw Error("satisfies: unhandled formula kind");
}

TruthSet apply_op(const Model& m, const OpInstance& op,
                  std::span<const TruthSet> args) {
    if (static_cast<int>(args.size()) != op.arity())
        throw Error("apply_op: arity mismatch");
    for (const TruthSet& t : args)
        if (t.size() != m.cell_count())
            throw Error("apply_op: truth set does not belong to this model");

    switch (op.kind) {
    case OpInstance::Kind::Not:
        return args[0].complement();
    case OpInstance::Kind::Or:
        return args[0].union_with(args[1]);
    default:
        break;
    }

    if (op.name < 0 || static_cast<std::size_t>(op.name) >= m.names.size())
        throw Error("apply_op: name index out of range");
    const TruthSet& arg = args[0];
    TruthSet out(m.cell_count());
    const int n_agents = static_cast<int>(m.agents.size());
    const int n_worlds = static_cast<int>(m.worlds.size());
    for (int w = 0; w < n_worlds; ++w) {
        for (int a = 0; a < n_agents; ++a) {
            bool holds = true;
            switch (op.kind) {
            case OpInstance::Kind::At:
                holds = arg.test(m.cell(w, m.referent(w, a, op.name)));
                break;
            case OpInstance::Kind::DeRe: {
                const int ref = m.referent(w, a, op.name);
                for (int u : m.block_of(a, w))
                    if (!arg.test(m.cell(u, ref))) {
                        holds = false;
                        break;
                    }
                break;
            }
            case OpInstance::Kind::DeDicto:
                for (int u : m.block_of(a, w))
                    if (!arg.test(m.cell(u, m.referent(u, a, op.name)))) {
                        holds = false;
                        break;
                    }
                break;
            default:
                break;
            }
            if (holds)
                out.set(m.cell(w, a));
        }
    }
    return out;
}

namespace {

TruthSet eval_sets(const Model& m, const Formula& f,
                   std::unordered_map<const void*, TruthSet>& memo) {
    if (auto it = memo.find(f.node_key()); it != memo.end())
        return it->second;
    TruthSet result(0);
    switch (f.kind()) {
    case FormulaKind::True:
        result = TruthSet::all(m.cell_count());
        break;
    case FormulaKind::False:
        result = TruthSet::none(m.cell_count());
        break;
    case FormulaKind::Prop:
        result = m.valuation[static_cast<std::size_t>(resolve_prop(m, f.prop()))];
        break;
    case FormulaKind::Not: {
        const TruthSet sub[] = {eval_sets(m, f.child(), memo)};
        result = apply_op(m, {OpInstance::Kind::Not}, sub);
        break;
    }
    case FormulaKind::Or: {
        const TruthSet sub[] = {eval_sets(m, f.child(), memo),
                                eval_sets(m, f.rhs(), memo)};
        result = apply_op(m, {OpInstance::Kind::Or}, sub);
        break;
    }
    case FormulaKind::At: {
        const TruthSet sub[] = {eval_sets(m, f.child(), memo)};
        result = apply_op(m, {OpInstance::Kind::At, resolve_name(m, f.name())}, sub);
        break;
    }
    case FormulaKind::DeRe: {
        const TruthSet sub[] = {eval_sets(m, f.child(), memo)};
        result =
            apply_op(m, {OpInstance::Kind::DeRe, resolve_name(m, f.name())}, sub);
        break;
    }
    case FormulaKind::DeDicto: {
        const TruthSet sub[] = {eval_sets(m, f.child(), memo)};
        result = apply_op(m, {OpInstance::Kind::DeDicto, resolve_name(m, f.name())},
                          sub);
        break;
    }
    }
    memo.emplace(f.node_key(), result);
    return result;
}

} // namespace

TruthSet truth_set(const Model& m, const Formula& f) {
    std::unordered_map<const void*, TruthSet> memo;
    return eval_sets(m, f, memo);
}

bool equivalent_on(const Model& m, const Formula& f, const Formula& g) {
    return truth_set(m, f) == truth_set(m, g);
}

std::optional<PointedQuery> first_difference(const Model& m, const Formula& f,
                                             const Formula& g) {
    const TruthSet tf = truth_set(m, f);
    const TruthSet tg = truth_set(m, g);
    const int n_agents = static_cast<int>(m.agents.size());
    for (std::size_t i = 0; i < m.cell_count(); ++i)
        if (tf.test(i) != tg.test(i))
            return PointedQuery{static_cast<int>(i) / n_agents,
                                static_cast<int>(i) % n_agents};
    return std::nullopt;
}

} // namespace ego
