#ifndef EGO_ENUMERATE_HPP
#define EGO_ENUMERATE_HPP

#include <vector>

#include "ego/formula.hpp"
#include "ego/signature.hpp"

namespace ego {

// Every formula over sig of size <= max_size, each exactly once, in
// nondecreasing size order; formulas of equal size are ordered by their
// canonical rendering (Formula::str(), byte-wise). An empty signature
// yields an empty stream.
std::vector<Formula> enumerate_formulas(const Signature& sig, int max_size);

} // namespace ego

#endif
