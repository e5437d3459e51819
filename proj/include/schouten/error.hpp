#pragma once

#include <stdexcept>
#include <string>

namespace schouten {

// Malformed input: parse errors, undeclared names, mismatched charts or
// degrees. The CLI maps this to exit code 2; identity failures are reported
// through report objects, not exceptions.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schouten
