#include "ego/enumerate.hpp"

#include <algorithm>

#include "ego/error.hpp"

namespace ego {

std::vector<Formula> enumerate_formulas(const Signature& sig, int max_size) {
    if (max_size < 1)
        throw Error("enumerate_formulas: max_size must be >= 1");

    // layers[s] = all formulas of size s+1, built by size-indexed DP.
    std::vector<std::vector<Formula>> layers;
    layers.emplace_back();
    for (const Prop& p : sig.props)
        layers[0].push_back(Formula::P(p));
    if (sig.allow_consts) {
        layers[0].push_back(Formula::False());
        layers[0].push_back(Formula::True());
    }

    for (int size = 2; size <= max_size; ++size) {
        std::vector<Formula> layer;
        const auto& prev = layers[static_cast<std::size_t>(size - 2)];
        if (sig.allow_not)
            for (const Formula& f : prev)
                layer.push_back(Formula::Not(f));
        for (const Name& n : sig.at_names)
            for (const Formula& f : prev)
                layer.push_back(Formula::At(n, f));
        for (const Name& n : sig.dere_names)
            for (const Formula& f : prev)
                layer.push_back(Formula::DeRe(n, f));
        for (const Name& n : sig.dedicto_names)
            for (const Formula& f : prev)
                layer.push_back(Formula::DeDicto(n, f));
        if (sig.allow_or)
            for (int left = 1; left <= size - 2; ++left) {
                const auto& ls = layers[static_cast<std::size_t>(left - 1)];
                const auto& rs = layers[static_cast<std::size_t>(size - 2 - left)];
                for (const Formula& l : ls)
                    for (const Formula& r : rs)
                        layer.push_back(Formula::Or(l, r));
            }
        layers.push_back(std::move(layer));
    }

    std::vector<Formula> out;
    for (auto& layer : layers) {
        std::vector<std::pair<std::string, Formula>> keyed;
        keyed.reserve(layer.size());
        for (Formula& f : layer)
            keyed.emplace_back(f.str(), std::move(f));
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [key, f] : keyed)
            out.push_back(std::move(f));
    }
    return out;
}

} // namespace ego
