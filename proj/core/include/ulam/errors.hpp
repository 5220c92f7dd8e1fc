#pragma once

#include <stdexcept>
#include <string>

namespace ulam {

// Thrown when a configured enumeration / node budget would be exceeded.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ulam
