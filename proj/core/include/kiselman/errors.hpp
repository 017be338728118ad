#pragma once

#include <stdexcept>
#include <string>

namespace kiselman {

// Thrown when a resource guard trips: completion rule cap, element cap,
// enumeration size limit, or the brute-force bit budget.
class GuardExceeded : public std::runtime_error {
 public:
  explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kiselman
