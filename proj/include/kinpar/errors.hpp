#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kinpar {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid grid, parameter or run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Non-positive density or temperature where a physical state is required.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// A propagator produced a non-finite or non-physical state.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, std::size_t step)
      : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}

  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// A propagation inside the parareal engine failed on a given time slice.
class SliceError : public Error {
 public:
  SliceError(const std::string& what, std::size_t slice)
      : Error("slice " + std::to_string(slice) + ": " + what), slice_(slice) {}

  std::size_t slice() const { return slice_; }

 private:
  std::size_t slice_;
};

// The parareal correction pushed a snapshot to negative density or temperature.
class CorrectionOvershootError : public SliceError {
 public:
  using SliceError::SliceError;
};

class ParseError : public ConfigError {
 public:
  ParseError(const std::string& key, std::size_t line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ", key '" + key + "': " + what),
        key_(key),
        line_(line) {}

  const std::string& key() const { return key_; }
  std::size_t line() const { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace kinpar
