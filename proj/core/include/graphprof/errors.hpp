#pragma once

#include <stdexcept>
#include <string>

namespace graphprof {

// Malformed input: bad vertex index, missing arc, unparsable file line.
// The message names the offending pair or line.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Predicted work or memory exceeds the configured cap. Raised eagerly,
// before any partial result is produced; the message carries the estimate.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact identity that must hold on every valid input failed. Indicates
// a bug, not bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace graphprof
