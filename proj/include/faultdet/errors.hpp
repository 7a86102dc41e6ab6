#pragma once

#include <stdexcept>
#include <string>

namespace faultdet {

// Bad flags, bad config keys, out-of-range rules. CLI exit code 3.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing or unreadable input files. CLI exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A contract the library promised to uphold was broken. CLI exit code 4.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace faultdet
