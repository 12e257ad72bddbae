#pragma once

#include <stdexcept>
#include <string>

namespace fza {

// Malformed or inconsistent input (CLI exit code 2).
struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured size guard refused the request (CLI exit code 3).
struct capacity_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fza
