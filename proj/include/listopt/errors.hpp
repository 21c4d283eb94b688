#pragma once

#include <stdexcept>
#include <string>

namespace listopt {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid values or instances: unknown items, out-of-range positions,
// malformed schedules, empty universes.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A guard or resource limit was exceeded (list too large for an
// l!-indexed structure, request sequence over the configured bound).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Bad invocation-level input, e.g. an unknown report format name.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace listopt
