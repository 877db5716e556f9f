#pragma once

#include <stdexcept>
#include <string>

namespace chevcert {

// A computed outcome that contradicts a theorem the library is built to
// check. Surfaces as process exit code 3; must never fire on valid inputs.
struct internal_defect_error : std::logic_error {
  explicit internal_defect_error(const std::string& what) : std::logic_error(what) {}
};

// Exact enumeration refused because the group is larger than the configured cap.
struct cap_exceeded_error : std::runtime_error {
  explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chevcert
