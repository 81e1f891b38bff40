#ifndef EGO_PARSE_HPP
#define EGO_PARSE_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "ego/error.hpp"
#include "ego/formula.hpp"

namespace ego {

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& found,
               const std::string& expected);

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Grammar (precedence tightest first: unary > & > | > ->, -> right-assoc):
//   formula := implies
//   implies := or ("->" implies)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | ("R"|"D"|"@") "[" name "]" unary | atom
//   atom    := "true" | "false" | prop | "(" formula ")"
//   prop, name := [A-Za-z_][A-Za-z0-9_]*
// "&" and "->" expand to the core Not/Or connectives during parsing.
Formula parse_formula(std::string_view text);

} // namespace ego

#endif
