#pragma once

#include <stdexcept>

namespace cyclow {

/* Thrown when a brute-force enumeration would exceed its configured budget
 * of membership tests / tuples. Callers can retry with a larger budget. */
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclow
