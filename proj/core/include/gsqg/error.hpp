#pragma once

#include <stdexcept>
#include <string>

namespace gsqg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain
/// (singular symbol on a non-mean-zero field, grid mismatch, bad index, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration text or out-of-range parameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed snapshot or CSV input.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsqg
