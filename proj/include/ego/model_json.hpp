#ifndef EGO_MODEL_JSON_HPP
#define EGO_MODEL_JSON_HPP

#include <string>

#include <json.hpp>

#include "ego/model.hpp"

namespace ego {

// Model document:
//   { "mode": "rigid" | "agent-specific",
//     "worlds": [...], "agents": [...], "names": [...], "props": [...],
//     "indist":    { agent: [[world, ...], ...] },
//     "extension": rigid          -> { world: { name: agent } }
//                  agent-specific -> { world: { agent: { name: agent } } },
//     "valuation": { prop: [[world, agent], ...] } }
// Unknown keys are rejected, every referenced id must be declared, and
// duplicate ids are rejected. The returned model is validated and finalized.
Model model_from_json(const nlohmann::json& doc);
nlohmann::json model_to_json(const Model& m);

Model load_model_file(const std::string& path);
void save_model_file(const Model& m, const std::string& path);

} // namespace ego

#endif
