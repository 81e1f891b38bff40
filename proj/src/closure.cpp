#include "ego/closure.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "ego/enumerate.hpp"
#include "ego/error.hpp"

namespace ego {

ClosureFamily::ClosureFamily(Signature sig, std::vector<TruthSet> members,
                             std::vector<Formula> witnesses, bool saturated)
    : signature_(std::move(sig)),
      members_(std::move(members)),
      witnesses_(std::move(witnesses)),
      saturated_(saturated) {
    if (members_.size() != witnesses_.size())
        throw Error("ClosureFamily: one witness per member required");
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (!index_.emplace(members_[i], i).second)
            throw Error("ClosureFamily: duplicate member");
}

bool ClosureFamily::contains(const TruthSet& t) const {
    return index_.contains(t);
}

std::optional<std::size_t> ClosureFamily::index_of(const TruthSet& t) const {
    auto it = index_.find(t);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const Formula& ClosureFamily::witness_for(const TruthSet& t) const {
    auto it = index_.find(t);
    if (it == index_.end())
        throw Error("ClosureFamily: not a member");
    return witnesses_[it->second];
}

std::vector<OpInstance> signature_ops(const Model& m, const Signature& sig) {
    for (const Prop& p : sig.props)
        if (m.prop_index(p.id) < 0)
            throw Error("signature prop \"" + p.id + "\" not declared in model");
    std::vector<OpInstance> ops;
    if (sig.allow_not)
        ops.push_back({OpInstance::Kind::Not});
    auto add_modal = [&](OpInstance::Kind kind, const std::vector<Name>& names) {
        for (const Name& n : names) {
            if (m.mode == Model::Mode::Rigid && n.id == kSelfName)
                throw Error("name \"se\" cannot be used on a rigid model");
            const int idx = m.name_index(n.id);
            if (idx < 0)
                throw Error("signature name \"" + n.id +
                            "\" not declared in model");
            ops.push_back({kind, idx});
        }
    };
    add_modal(OpInstance::Kind::At, sig.at_names);
    add_modal(OpInstance::Kind::DeRe, sig.dere_names);
    add_modal(OpInstance::Kind::DeDicto, sig.dedicto_names);
    if (sig.allow_or)
        ops.push_back({OpInstance::Kind::Or});
    return ops;
}

namespace {

struct Candidate {
    int size;
    std::string key; // canonical rendering; total order within a size
    Formula formula;
    TruthSet set;
};

struct CandidateAfter {
    bool operator()(const Candidate& x, const Candidate& y) const {
        if (x.size != y.size)
            return x.size > y.size;
        return x.key > y.key; // min-heap on (size, key)
    }
};

Formula modal_formula(const Model& m, const OpInstance& op, const Formula& arg) {
    const Name n{m.names[static_cast<std::size_t>(op.name)]};
    switch (op.kind) {
    case OpInstance::Kind::At:
        return Formula::At(n, arg);
    case OpInstance::Kind::DeRe:
        return Formula::DeRe(n, arg);
    case OpInstance::Kind::DeDicto:
        return Formula::DeDicto(n, arg);
    default:
        throw Error("modal_formula: not a modal op");
    }
}

} // namespace

ClosureFamily close(const Model& m, const Signature& sig) {
    const std::vector<OpInstance> ops = signature_ops(m, sig);
    const std::vector<OpInstance> unary_ops = [&] {
        std::vector<OpInstance> v;
        for (const OpInstance& op : ops)
            if (op.arity() == 1)
                v.push_back(op);
        return v;
    }();

    // Settled truth sets cannot exceed the grid's power set; tripping this
    // limit would mean the worklist re-settled a set.
    const std::size_t bits = m.cell_count();
    const std::size_t member_limit =
        bits >= 63 ? SIZE_MAX : (std::size_t{1} << bits);

    std::priority_queue<Candidate, std::vector<Candidate>, CandidateAfter> heap;
    std::unordered_set<TruthSet, TruthSet::Hash> settled_sets;
    std::vector<TruthSet> members;
    std::vector<Formula> witnesses;

    auto push = [&](Formula f, TruthSet t) {
        if (settled_sets.contains(t))
            return;
        std::string key = f.str();
        heap.push(Candidate{f.size(), std::move(key), std::move(f), std::move(t)});
    };

    for (const Prop& p : sig.props) {
        Formula f = Formula::P(p);
        TruthSet t = truth_set(m, f);
        push(std::move(f), std::move(t));
    }
    if (sig.allow_consts) {
        push(Formula::False(), TruthSet::none(bits));
        push(Formula::True(), TruthSet::all(bits));
    }

    while (!heap.empty()) {
        Candidate c = heap.top();
        heap.pop();
        if (settled_sets.contains(c.set))
            continue;
        if (members.size() >= member_limit)
            throw Error("close: member count exceeded the power set bound "
                        "(internal error)");
        settled_sets.insert(c.set);
        members.push_back(c.set);
        witnesses.push_back(c.formula);

        for (const OpInstance& op : unary_ops) {
            const TruthSet args[] = {c.set};
            TruthSet result = apply_op(m, op, args);
            Formula f = op.kind == OpInstance::Kind::Not
                            ? Formula::Not(c.formula)
                            : modal_formula(m, op, c.formula);
            push(std::move(f), std::move(result));
        }
        if (sig.allow_or) {
            // Pair the fresh member with every earlier member, both ways:
            // the unions coincide but the canonical keys differ.
            for (std::size_t i = 0; i + 1 < members.size(); ++i) {
                TruthSet u = c.set.union_with(members[i]);
                if (settled_sets.contains(u))
                    continue;
                push(Formula::Or(c.formula, witnesses[i]), u);
                push(Formula::Or(witnesses[i], c.formula), std::move(u));
            }
        }
    }

    return ClosureFamily(sig, std::move(members), std::move(witnesses), true);
}

std::vector<TruthSet> oracle_family(const Model& m, const Signature& sig,
                                    int max_size) {
    std::vector<TruthSet> out;
    std::unordered_set<TruthSet, TruthSet::Hash> seen;
    for (const Formula& f : enumerate_formulas(sig, max_size)) {
        TruthSet t = truth_set(m, f);
        if (seen.insert(t).second)
            out.push_back(std::move(t));
    }
    return out;
}

} // namespace ego
