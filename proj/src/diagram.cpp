#include "ego/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "ego/error.hpp"

namespace ego {

std::string render_diagram(const Model& m, const TruthSet& t) {
    if (t.size() != m.cell_count())
        throw Error("render_diagram: truth set does not belong to this model");
    std::size_t world_width = 1;
    for (const std::string& w : m.worlds)
        world_width = std::max(world_width, w.size());

    std::ostringstream out;
    out << std::string(world_width, ' ');
    for (const std::string& a : m.agents)
        out << "  " << a;
    out << "\n";
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
        out << m.worlds[w]
            << std::string(world_width - m.worlds[w].size(), ' ');
        for (std::size_t a = 0; a < m.agents.size(); ++a) {
            const bool member =
                t.test(m.cell(static_cast<int>(w), static_cast<int>(a)));
            out << "  " << (member ? '#' : '.')
                << std::string(m.agents[a].size() - 1, ' ');
        }
        out << "\n";
    }
    return out.str();
}

TruthSet parse_diagram(const Model& m, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw Error("parse_diagram: empty diagram");
    // Header: agent ids in declaration order.
    {
        std::istringstream head(line);
        std::string tok;
        for (const std::string& a : m.agents) {
            if (!(head >> tok) || tok != a)
                throw Error("parse_diagram: bad header");
        }
    }
    TruthSet t(m.cell_count());
    for (std::size_t w = 0; w < m.worlds.size(); ++w) {
        if (!std::getline(in, line))
            throw Error("parse_diagram: missing row for world " + m.worlds[w]);
        std::istringstream row(line);
        std::string tok;
        if (!(row >> tok) || tok != m.worlds[w])
            throw Error("parse_diagram: bad row label");
        for (std::size_t a = 0; a < m.agents.size(); ++a) {
            if (!(row >> tok) || (tok != "#" && tok != "."))
                throw Error("parse_diagram: bad cell");
            if (tok == "#")
                t.set(m.cell(static_cast<int>(w), static_cast<int>(a)));
        }
    }
    return t;
}

} // namespace ego
