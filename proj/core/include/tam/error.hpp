#pragma once

#include <stdexcept>
#include <string>

namespace tam {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coordinate left the representable lattice window.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace tam
