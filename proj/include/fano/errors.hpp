#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// Bad input or violated precondition (parse errors, singular data, inadmissible degree).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A computation that could not finish: budget exhausted, no convergence, failed verification.
class ComputationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace fano
