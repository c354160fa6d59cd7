#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace starconf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters or mismatched arities. Maps to CLI exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for this input (e.g. alpha of the zero ideal).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured cap. Maps to CLI exit code 3.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::int64_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::int64_t cap() const noexcept { return cap_; }

 private:
  std::int64_t cap_;
};

}  // namespace starconf
