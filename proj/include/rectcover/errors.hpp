#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rectcover {

struct ParseError : std::runtime_error {
  std::size_t offset;  // byte offset into the input text

  ParseError(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Candidate enumeration or solver instance exceeded its configured size cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct TimeoutError : std::runtime_error {
  explicit TimeoutError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rectcover
