#include "ego/model_json.hpp"

#include <fstream>

#include "ego/error.hpp"

namespace ego {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k)
                ok = true;
        if (!ok)
            throw Error(where + ": unknown key \"" + key + "\"");
    }
}

std::vector<std::string> id_list(const json& doc, const std::string& key) {
    const json& arr = doc.at(key);
    if (!arr.is_array())
        throw Error("model: \"" + key + "\" must be an array of strings");
    std::vector<std::string> out;
    for (const json& v : arr) {
        if (!v.is_string())
            throw Error("model: \"" + key + "\" must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

int index_or_throw(const Model& m, int (Model::*lookup)(const std::string&) const,
                   const std::string& id, const std::string& where,
                   const char* what) {
    const int idx = (m.*lookup)(id);
    if (idx < 0)
        throw Error(where + ": undeclared " + what + " \"" + id + "\"");
    return idx;
}

} // namespace

namespace {

Model model_from_json_impl(const json& doc) {
    if (!doc.is_object())
        throw Error("model: document must be a JSON object");
    reject_unknown_keys(
        doc, {"mode", "worlds", "agents", "names", "props", "indist",
              "extension", "valuation"},
        "model");
    for (const char* key : {"mode", "worlds", "agents", "names", "props",
                            "indist", "extension", "valuation"})
        if (!doc.contains(key))
            throw Error("model: missing key \"" + std::string(key) + "\"");

    Model m;
    const std::string mode = doc.at("mode").get<std::string>();
    if (mode == "rigid")
        m.mode = Model::Mode::Rigid;
    else if (mode == "agent-specific")
        m.mode = Model::Mode::AgentSpecific;
    else
        throw Error("model: mode must be \"rigid\" or \"agent-specific\"");

    m.worlds = id_list(doc, "worlds");
    m.agents = id_list(doc, "agents");
    m.names = id_list(doc, "names");
    m.props = id_list(doc, "props");

    // Partial index tables so the remaining sections can resolve ids.
    // Duplicate ids are caught by validate_model afterwards; the lookup
    // tables just take the first occurrence.
    m.indist.assign(m.agents.size(), {});
    if (m.mode == Model::Mode::Rigid)
        m.extension_rigid.assign(m.worlds.size(),
                                 std::vector<int>(m.names.size(), -1));
    else
        m.extension_as.assign(
            m.worlds.size(),
            std::vector<std::vector<int>>(m.agents.size(),
                                          std::vector<int>(m.names.size(), -1)));
    m.valuation.assign(m.props.size(), TruthSet(m.cell_count()));
    m.finalize();

    const json& indist = doc.at("indist");
    if (!indist.is_object())
        throw Error("model: \"indist\" must be an object keyed by agent");
    for (const auto& [agent_id, blocks] : indist.items()) {
        const int a = index_or_throw(m, &Model::agent_index, agent_id, "indist",
                                     "agent");
        if (!blocks.is_array())
            throw Error("indist[" + agent_id + "]: must be an array of blocks");
        for (const json& block : blocks) {
            if (!block.is_array())
                throw Error("indist[" + agent_id + "]: block must be an array");
            std::vector<int> b;
            for (const json& w : block)
                b.push_back(index_or_throw(m, &Model::world_index,
                                           w.get<std::string>(),
                                           "indist[" + agent_id + "]", "world"));
            m.indist[static_cast<std::size_t>(a)].push_back(std::move(b));
        }
    }

    const json& ext = doc.at("extension");
    if (!ext.is_object())
        throw Error("model: \"extension\" must be an object keyed by world");
    for (const auto& [world_id, row] : ext.items()) {
        const int w = index_or_throw(m, &Model::world_index, world_id,
                                     "extension", "world");
        if (!row.is_object())
            throw Error("extension[" + world_id + "]: must be an object");
        if (m.mode == Model::Mode::Rigid) {
            for (const auto& [name_id, agent_id] : row.items()) {
                const int n = index_or_throw(m, &Model::name_index, name_id,
                                             "extension[" + world_id + "]",
                                             "name");
                const int a = index_or_throw(m, &Model::agent_index,
                                             agent_id.get<std::string>(),
                                             "extension[" + world_id + "]",
                                             "agent");
                m.extension_rigid[static_cast<std::size_t>(w)]
                                 [static_cast<std::size_t>(n)] = a;
            }
        } else {
            for (const auto& [agent_id, per_name] : row.items()) {
                const int a = index_or_throw(m, &Model::agent_index, agent_id,
                                             "extension[" + world_id + "]",
                                             "agent");
                if (!per_name.is_object())
                    throw Error("extension[" + world_id + "][" + agent_id +
                                "]: must be an object");
                for (const auto& [name_id, ref_id] : per_name.items()) {
                    const int n = index_or_throw(
                        m, &Model::name_index, name_id,
                        "extension[" + world_id + "][" + agent_id + "]", "name");
                    const int ref = index_or_throw(
                        m, &Model::agent_index, ref_id.get<std::string>(),
                        "extension[" + world_id + "][" + agent_id + "]",
                        "agent");
                    m.extension_as[static_cast<std::size_t>(w)]
                                  [static_cast<std::size_t>(a)]
                                  [static_cast<std::size_t>(n)] = ref;
                }
            }
        }
    }

    const json& val = doc.at("valuation");
    if (!val.is_object())
        throw Error("model: \"valuation\" must be an object keyed by prop");
    for (const auto& [prop_id, pairs] : val.items()) {
        const int p = index_or_throw(m, &Model::prop_index, prop_id,
                                     "valuation", "prop");
        if (!pairs.is_array())
            throw Error("valuation[" + prop_id + "]: must be an array of pairs");
        for (const json& pair : pairs) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error("valuation[" + prop_id +
                            "]: entries must be [world, agent] pairs");
            const int w = index_or_throw(m, &Model::world_index,
                                         pair[0].get<std::string>(),
                                         "valuation[" + prop_id + "]", "world");
            const int a = index_or_throw(m, &Model::agent_index,
                                         pair[1].get<std::string>(),
                                         "valuation[" + prop_id + "]", "agent");
            m.valuation[static_cast<std::size_t>(p)].set(m.cell(w, a));
        }
    }

    const auto violations = validate_model(m);
    if (!violations.empty()) {
        std::string msg = "model does not validate:";
        for (const std::string& v : violations)
            msg += "\n  - " + v;
        throw Error(msg);
    }
    m.finalize();
    return m;
}

} // namespace

Model model_from_json(const json& doc) {
    try {
        return model_from_json_impl(doc);
    } catch (const json::exception& e) {
        throw Error(std::string("model: malformed document: ") + e.what());
    }
}

json model_to_json(const Model& m) {
    json doc;
    doc["mode"] = m.mode == Model::Mode::Rigid ? "rigid" : "agent-specific";
    doc["worlds"] = m.worlds;
    doc["agents"] = m.agents;
    doc["names"] = m.names;
    doc["props"] = m.props;

    json indist = json::object();
    for (std::size_t a = 0; a < m.agents.size(); ++a) {
        json blocks = json::array();
        for (const auto& block : m.indist[a]) {
            json b = json::array();
            for (int w : block)
                b.push_back(m.worlds[static_cast<std::size_t>(w)]);
            blocks.push_back(std::move(b));
        }
        indist[m.agents[a]] = std::move(blocks);
    }
    doc["indist"] = std::move(indist);

    json ext = json::object();
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
        json row = json::object();
        if (m.mode == Model::Mode::Rigid) {
            for (std::size_t n = 0; n < m.names.size(); ++n)
                row[m.names[n]] =
                    m.agents[static_cast<std::size_t>(m.extension_rigid[w][n])];
        } else {
            for (std::size_t a = 0; a < m.agents.size(); ++a) {
                json per_name = json::object();
                for (std::size_t n = 0; n < m.names.size(); ++n)
                    per_name[m.names[n]] = m.agents[static_cast<std::size_t>(
                        m.extension_as[w][a][n])];
                row[m.agents[a]] = std::move(per_name);
            }
        }
        ext[m.worlds[w]] = std::move(row);
    }
    doc["extension"] = std::move(ext);

    json val = json::object();
    for (std::size_t p = 0; p < m.props.size(); ++p) {
        json pairs = json::array();
        for (std::size_t w = 0; w < m.worlds.size(); ++w)
            for (std::size_t a = 0; a < m.agents.size(); ++a)
                if (m.valuation[p].test(m.cell(static_cast<int>(w),
                                               static_cast<int>(a))))
                    pairs.push_back(json::array({m.worlds[w], m.agents[a]}));
        val[m.props[p]] = std::move(pairs);
    }
    doc["valuation"] = std::move(val);
    return doc;
}

Model load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open model file \"" + path + "\"");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw Error("model file \"" + path + "\": " + e.what());
    }
    return model_from_json(doc);
}

void save_model_file(const Model& m, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write model file \"" + path + "\"");
    out << model_to_json(m).dump(2) << "\n";
}

} // namespace ego
