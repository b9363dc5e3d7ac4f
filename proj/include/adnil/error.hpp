#pragma once

#include <stdexcept>
#include <string>

namespace adnil {

/// The requested operation is not defined for this root system type.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical guarantee failed to hold; always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace adnil
