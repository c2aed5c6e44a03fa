#pragma once

#include <stdexcept>

namespace sodforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search ran out of its node budget before finishing.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sodforge
