#include "ego/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "ego/error.hpp"
#include "ego/formula.hpp"

namespace ego {

namespace {

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

void build_index(const std::vector<std::string>& ids,
                 std::unordered_map<std::string, int>& out) {
    out.clear();
    for (std::size_t i = 0; i < ids.size(); ++i)
        out.emplace(ids[i], static_cast<int>(i));
}

int lookup(const std::unordered_map<std::string, int>& idx,
           const std::string& id) {
    auto it = idx.find(id);
    return it == idx.end() ? -1 : it->second;
}

} // namespace

void Model::finalize() {
    build_index(worlds, world_idx_);
    build_index(agents, agent_idx_);
    build_index(names, name_idx_);
    build_index(props, prop_idx_);
    block_id_.assign(agents.size(), {});
    for (std::size_t a = 0; a < agents.size(); ++a) {
        block_id_[a].assign(worlds.size(), -1);
        for (std::size_t b = 0; b < indist[a].size(); ++b)
            for (int w : indist[a][b])
                block_id_[a][static_cast<std::size_t>(w)] = static_cast<int>(b);
    }
}

int Model::world_index(const std::string& id) const { return lookup(world_idx_, id); }
int Model::agent_index(const std::string& id) const { return lookup(agent_idx_, id); }
int Model::name_index(const std::string& id) const { return lookup(name_idx_, id); }
int Model::prop_index(const std::string& id) const { return lookup(prop_idx_, id); }

const std::vector<int>& Model::block_of(int agent, int world) const {
    const int b =
        block_id_.at(static_cast<std::size_t>(agent)).at(static_cast<std::size_t>(world));
    if (b < 0)
        throw Error("model: world not covered by the agent's partition "
                    "(finalize() on an invalid model?)");
    return indist[static_cast<std::size_t>(agent)][static_cast<std::size_t>(b)];
}

int Model::referent(int world, int agent, int name) const {
    if (mode == Mode::Rigid)
        return extension_rigid[static_cast<std::size_t>(world)]
                              [static_cast<std::size_t>(name)];
    return extension_as[static_cast<std::size_t>(world)]
                       [static_cast<std::size_t>(agent)]
                       [static_cast<std::size_t>(name)];
}

namespace {

void validate_id_list(const std::vector<std::string>& ids, const char* what,
                      bool identifiers_only, std::vector<std::string>& out) {
    std::set<std::string> seen;
    for (const std::string& id : ids) {
        if (id.empty())
            out.push_back(std::string(what) + ": empty id");
        else if (identifiers_only && !is_identifier(id))
            out.push_back(std::string(what) + " \"" + id +
                          "\": must match [A-Za-z_][A-Za-z0-9_]*");
        else if (identifiers_only && (id == "true" || id == "false"))
            out.push_back(std::string(what) + " \"" + id +
                          "\": reserved keyword");
        if (!seen.insert(id).second)
            out.push_back(std::string(what) + " \"" + id + "\": duplicate id");
    }
}

void validate_partition(const Model& m, std::size_t agent,
                        std::vector<std::string>& out) {
    const std::string where = "indist[" + m.agents[agent] + "]";
    const auto& blocks = m.indist[agent];
    std::vector<int> seen_count(m.worlds.size(), 0);
    for (const auto& block : blocks) {
        if (block.empty()) {
            out.push_back(where + ": empty block");
            continue;
        }
        for (int w : block) {
            if (w < 0 || static_cast<std::size_t>(w) >= m.worlds.size()) {
                out.push_back(where + ": world index out of range");
                continue;
            }
            if (++seen_count[static_cast<std::size_t>(w)] == 2)
                out.push_back(where + ": duplicate world " +
                              m.worlds[static_cast<std::size_t>(w)]);
        }
    }
    for (std::size_t w = 0; w < m.worlds.size(); ++w)
        if (seen_count[w] == 0)
            out.push_back(where + ": world " + m.worlds[w] +
                          " missing from partition");
}

void validate_extension(const Model& m, std::vector<std::string>& out) {
    const std::size_t n_w = m.worlds.size();
    const std::size_t n_a = m.agents.size();
    const std::size_t n_n = m.names.size();
    auto check_agent_value = [&](int v, const std::string& where) {
        if (v < 0 || static_cast<std::size_t>(v) >= n_a)
            out.push_back("extension " + where + ": value is not an agent");
    };
    if (n_n > 0 && n_w > 0 && n_a == 0) {
        out.push_back("extension cannot be total: no agents");
        return;
    }
    if (m.mode == Model::Mode::Rigid) {
        if (m.extension_rigid.size() != n_w) {
            out.push_back("extension: expected one row per world");
            return;
        }
        for (std::size_t w = 0; w < n_w; ++w) {
            if (m.extension_rigid[w].size() != n_n) {
                out.push_back("extension[" + m.worlds[w] +
                              "]: expected one entry per name");
                continue;
            }
            for (std::size_t n = 0; n < n_n; ++n)
                check_agent_value(m.extension_rigid[w][n],
                                  "[" + m.worlds[w] + "][" + m.names[n] + "]");
        }
    } else {
        if (m.extension_as.size() != n_w) {
            out.push_back("extension: expected one row per world");
            return;
        }
        int se = -1;
        for (std::size_t n = 0; n < n_n; ++n)
            if (m.names[n] == kSelfName)
                se = static_cast<int>(n);
        for (std::size_t w = 0; w < n_w; ++w) {
            if (m.extension_as[w].size() != n_a) {
                out.push_back("extension[" + m.worlds[w] +
                              "]: expected one row per agent");
                continue;
            }
            for (std::size_t a = 0; a < n_a; ++a) {
                if (m.extension_as[w][a].size() != n_n) {
                    out.push_back("extension[" + m.worlds[w] + "][" +
                                  m.agents[a] + "]: expected one entry per name");
                    continue;
                }
                for (std::size_t n = 0; n < n_n; ++n)
                    check_agent_value(m.extension_as[w][a][n],
                                      "[" + m.worlds[w] + "][" + m.agents[a] +
                                          "][" + m.names[n] + "]");
                if (se >= 0 &&
                    m.extension_as[w][a][static_cast<std::size_t>(se)] !=
                        static_cast<int>(a))
                    out.push_back("extension[" + m.worlds[w] + "][" +
                                  m.agents[a] + "][se]: the se name must "
                                  "denote the evaluating agent");
            }
        }
    }
}

} // namespace

std::vector<std::string> validate_model(const Model& m) {
    std::vector<std::string> out;
    validate_id_list(m.worlds, "world", false, out);
    validate_id_list(m.agents, "agent", false, out);
    validate_id_list(m.names, "name", true, out);
    validate_id_list(m.props, "prop", true, out);
    if (m.mode == Model::Mode::Rigid)
        for (const std::string& n : m.names)
            if (n == kSelfName)
                out.push_back("name \"se\": reserved for agent-specific mode");
    if (m.indist.size() != m.agents.size())
        out.push_back("indist: expected one partition per agent");
    else
        for (std::size_t a = 0; a < m.agents.size(); ++a)
            validate_partition(m, a, out);
    validate_extension(m, out);
    if (m.valuation.size() != m.props.size())
        out.push_back("valuation: expected one truth set per prop");
    else
        for (std::size_t p = 0; p < m.props.size(); ++p)
            if (m.valuation[p].size() != m.cell_count())
                out.push_back("valuation[" + m.props[p] +
                              "]: wrong grid size");
    return out;
}

namespace {

Model finish(Model m) {
    const auto violations = validate_model(m);
    if (!violations.empty())
        throw Error("fixture does not validate: " + violations.front());
    m.finalize();
    return m;
}

TruthSet cells(const Model& m,
               const std::vector<std::pair<int, int>>& pairs) {
    TruthSet t(m.cell_count());
    for (auto [w, a] : pairs)
        t.set(m.cell(w, a));
    return t;
}

// Four worlds w,u,v,t; two agents a,b; both agents see blocks {w,u},{v,t};
// Ann denotes a in w,v and b in u,t; p holds at (w,a),(u,b),(v,b),(t,a).
Model make_m_dr() {
    Model m;
    m.mode = Model::Mode::Rigid;
    m.worlds = {"w", "u", "v", "t"};
    m.agents = {"a", "b"};
    m.names = {"Ann"};
    m.props = {"p"};
    m.indist = {{{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}};
    m.extension_rigid = {{0}, {1}, {0}, {1}};
    m.valuation = {cells(m, {{0, 0}, {1, 1}, {2, 1}, {3, 0}})};
    return finish(std::move(m));
}

// Two worlds w,u; agent a cannot tell them apart, agent b can; Ann denotes
// a in w and b in u; p holds at (w,a),(u,b).
Model make_m_rd() {
    Model m;
    m.mode = Model::Mode::Rigid;
    m.worlds = {"w", "u"};
    m.agents = {"a", "b"};
    m.names = {"Ann"};
    m.props = {"p"};
    m.indist = {{{0, 1}}, {{0}, {1}}};
    m.extension_rigid = {{0}, {1}};
    m.valuation = {cells(m, {{0, 0}, {1, 1}})};
    return finish(std::move(m));
}

} // namespace

Model fixture(const std::string& id) {
    if (id == "M_DR")
        return make_m_dr();
    if (id == "M_RD")
        return make_m_rd();
    throw Error("unknown fixture id \"" + id + "\" (expected M_DR or M_RD)");
}

} // namespace ego
