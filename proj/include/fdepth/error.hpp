#pragma once

#include <stdexcept>
#include <string>

namespace fdepth {

// Raised for invalid data, infeasible parameters and compute failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file could not be read or decoded.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fdepth
