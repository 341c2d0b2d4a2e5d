#pragma once

#include <stdexcept>
#include <string>

namespace retrial {

// Bad or inconsistent configuration (missing interpreter, bad prompt dir,
// malformed config file). Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Problems ingesting benchmark data. Maps to CLI exit code 3.
class DatasetError : public std::runtime_error {
 public:
  explicit DatasetError(const std::string& what) : std::runtime_error(what) {}
};

// A chat backend call failed. `retryable` distinguishes transient transport
// trouble (already retried inside the backend) from fatal protocol errors.
class BackendError : public std::runtime_error {
 public:
  BackendError(const std::string& what, bool retryable = false)
      : std::runtime_error(what), retryable_(retryable) {}
  bool retryable() const { return retryable_; }

 private:
  bool retryable_;
};

}  // namespace retrial
