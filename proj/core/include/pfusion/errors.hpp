#pragma once

#include <stdexcept>
#include <string>

namespace pfusion {

// Every error carries the module that raised it; the CLI prints "module: message".
class Error : public std::runtime_error {
 public:
  Error(std::string module, const std::string& what)
      : std::runtime_error(what), module_(std::move(module)) {}
  const std::string& module() const { return module_; }

 private:
  std::string module_;
};

class InputError : public Error {
  using Error::Error;
};

// A desk-scale cap (degree, order, lattice size, closure size) was exceeded.
class CapError : public Error {
  using Error::Error;
};

// An operation's stated precondition does not hold for the given arguments.
class PreconditionError : public Error {
  using Error::Error;
};

// Internal consistency check failed; indicates a bug.
class InternalError : public Error {
  using Error::Error;
};

}  // namespace pfusion
