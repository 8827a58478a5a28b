#pragma once

#include <stdexcept>
#include <string>

namespace dreamtext {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input bytes (bad UTF-8 and the like).
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t byte_offset)
      : Error(what + " at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Invalid data or specs: bad filter bounds, unknown words, duplicate labels.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

// Config file problems; message carries the offending field path.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace dreamtext
