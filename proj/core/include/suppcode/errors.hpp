#ifndef SUPPCODE_ERRORS_HPP
#define SUPPCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace suppcode {

// Raised when an enumeration or search would exceed its resource bound.
// The CLI maps this to exit code 3; std::invalid_argument maps to exit code 2.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace suppcode

#endif
