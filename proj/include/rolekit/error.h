//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_ERROR_H_
#define ROLEKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace rolekit {

class Error: public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// File missing or unreadable.
class IoError: public Error {
public:
  using Error::Error;
};

// Malformed or inconsistent input data.
class ParseError: public Error {
public:
  using Error::Error;
};

// An exact (exponential) algorithm was asked to run on an input larger than
// its configured bound.
class SizeGuardError: public Error {
public:
  using Error::Error;
};

// Integer arithmetic would have wrapped around.
class OverflowError: public Error {
public:
  using Error::Error;
};

}  // namespace rolekit

#endif  // ROLEKIT_ERROR_H_
