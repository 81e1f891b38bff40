#ifndef EGO_ERROR_HPP
#define EGO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ego {

// Base class for all library errors. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ego

#endif
