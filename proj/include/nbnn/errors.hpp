#pragma once

#include <stdexcept>

namespace nbnn {

// Invalid argument or precondition violation (bad parameters, shape mismatch).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Not enough data to answer the request, e.g. fewer minority points than k.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Malformed or unreadable input files.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nbnn
