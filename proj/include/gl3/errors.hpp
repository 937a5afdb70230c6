#pragma once

#include <stdexcept>
#include <string>

namespace gl3 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotInvertible : Error {
  using Error::Error;
};
struct InvalidTriple : Error {
  using Error::Error;
};
struct InvalidSubset : Error {
  using Error::Error;
};
struct InvalidDescriptor : Error {
  using Error::Error;
};
/// Requested enumeration exceeds the desk-scale limits.
struct ScaleExceeded : Error {
  using Error::Error;
};
/// Truncation level N is smaller than a triple entry that must be resolved.
struct LevelTooSmall : Error {
  using Error::Error;
};
struct OutOfRange : Error {
  using Error::Error;
};

}  // namespace gl3
