#ifndef EGO_DIAGRAM_HPP
#define EGO_DIAGRAM_HPP

#include <string>

#include "ego/model.hpp"
#include "ego/truth_set.hpp"

namespace ego {

// Text grid for a truth set: one row per world, one column per agent (both
// in declaration order), '#' for members and '.' otherwise. Example:
//       a  b
//    w  #  .
//    u  .  #
std::string render_diagram(const Model& m, const TruthSet& t);

// Inverse of render_diagram (whitespace-insensitive); used to check that
// rendering loses no information.
TruthSet parse_diagram(const Model& m, const std::string& text);

} // namespace ego

#endif
