#include "ego/signature.hpp"

#include <algorithm>
#include <cctype>

#include "ego/error.hpp"

namespace ego {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_name(const std::vector<Name>& v, const Name& n) {
    return std::find(v.begin(), v.end(), n) != v.end();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

bool is_identifier(const std::string& s) {
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

} // namespace

void Signature::normalize() {
    sort_unique(at_names);
    sort_unique(dere_names);
    sort_unique(dedicto_names);
    sort_unique(props);
}

bool formula_in_signature(const Formula& f, const Signature& sig) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
        return sig.allow_consts;
    case FormulaKind::Prop:
        return std::find(sig.props.begin(), sig.props.end(), f.prop()) !=
               sig.props.end();
    case FormulaKind::Not:
        return sig.allow_not && formula_in_signature(f.child(), sig);
    case FormulaKind::Or:
        return sig.allow_or && formula_in_signature(f.child(), sig) &&
               formula_in_signature(f.rhs(), sig);
    case FormulaKind::At:
        return contains_name(sig.at_names, f.name()) &&
               formula_in_signature(f.child(), sig);
    case FormulaKind::DeRe:
        return contains_name(sig.dere_names, f.name()) &&
               formula_in_signature(f.child(), sig);
    case FormulaKind::DeDicto:
        return contains_name(sig.dedicto_names, f.name()) &&
               formula_in_signature(f.child(), sig);
    }
    return false;
}

Signature parse_signature(const std::string& spec) {
    const std::vector<std::string> fields = split(spec, ';');
    if (fields.size() != 3)
        throw Error("signature spec must have three ';'-separated fields "
                    "(props;booleans;modalities), got: \"" +
                    spec + "\"");
    Signature sig;
    for (const std::string& raw : split(fields[0], ',')) {
        const std::string tok = strip(raw);
        if (tok.empty())
            continue;
        if (tok == "true" || tok == "false") {
            sig.allow_consts = true;
            continue;
        }
        if (!is_identifier(tok))
            throw Error("signature spec: bad prop \"" + tok + "\"");
        sig.props.push_back(Prop{tok});
    }
    for (const std::string& raw : split(fields[1], ',')) {
        const std::string tok = strip(raw);
        if (tok.empty())
            continue;
        if (tok == "not")
            sig.allow_not = true;
        else if (tok == "or")
            sig.allow_or = true;
        else
            throw Error("signature spec: bad boolean \"" + tok +
                        "\" (expected not/or)");
    }
    for (const std::string& raw : split(fields[2], ',')) {
        const std::string tok = strip(raw);
        if (tok.empty())
            continue;
        if (tok.size() < 4 || tok[tok.size() - 1] != ']')
            throw Error("signature spec: bad modality \"" + tok +
                        "\" (expected R[name], D[name] or @[name])");
        std::size_t open;
        std::vector<Name>* bucket;
        if (tok[0] == '@' && tok[1] == '[') {
            open = 1;
            bucket = &sig.at_names;
        } else if (tok[0] == 'R' && tok[1] == '[') {
            open = 1;
            bucket = &sig.dere_names;
        } else if (tok[0] == 'D' && tok[1] == '[') {
            open = 1;
            bucket = &sig.dedicto_names;
        } else {
            throw Error("signature spec: bad modality \"" + tok + "\"");
        }
        const std::string name = strip(tok.substr(open + 1, tok.size() - open - 2));
        if (!is_identifier(name) || name == "true" || name == "false")
            throw Error("signature spec: bad name in \"" + tok + "\"");
        bucket->push_back(Name{name});
    }
    sig.normalize();
    return sig;
}

std::string signature_to_string(const Signature& sig) {
    std::string out;
    bool first = true;
    for (const Prop& p : sig.props) {
        if (!first)
            out += ',';
        out += p.id;
        first = false;
    }
    if (sig.allow_consts) {
        if (!first)
            out += ',';
        out += "true,false";
    }
    out += ';';
    first = true;
    if (sig.allow_not) {
        out += "not";
        first = false;
    }
    if (sig.allow_or) {
        if (!first)
            out += ',';
        out += "or";
    }
    out += ';';
    first = true;
    auto emit = [&](char op, const std::vector<Name>& names) {
        for (const Name& n : names) {
            if (!first)
                out += ',';
            out += op;
            out += '[';
            out += n.id;
            out += ']';
            first = false;
        }
    };
    emit('R', sig.dere_names);
    emit('D', sig.dedicto_names);
    emit('@', sig.at_names);
    return out;
}

} // namespace ego
