#pragma once

#include <stdexcept>
#include <string>

namespace bucl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text, self-loops, duplicate or out-of-range pairs in input.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Exact oracles refuse inputs beyond their configured size caps.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bucl
