#pragma once

#include <stdexcept>
#include <string>

namespace segpoint {

// Validation failures (bad arguments, malformed configs) map to CLI exit 2,
// io_error to exit 3, internal_error to exit 4.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace segpoint
