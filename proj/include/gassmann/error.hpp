#pragma once

#include <stdexcept>
#include <string>

namespace gassmann {

/// Malformed or inconsistent user input (bad element, unknown generator, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a documented size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant: d1*d2 != 0, a kernel that is not closed, ...
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
inline void require_input(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}
inline void require_resource(bool ok, const std::string& what) {
  if (!ok) throw ResourceError(what);
}
inline void require_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}
}  // namespace detail

}  // namespace gassmann
