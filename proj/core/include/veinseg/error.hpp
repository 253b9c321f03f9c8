#pragma once

#include <stdexcept>
#include <string>

namespace veinseg {

/// A value violates an operation's precondition (negative radius, b <= 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed or truncated image file. `field()` names the offending header
/// field ("magic", "width", "height", "maxval", "payload", ...).
class FormatError : public std::runtime_error {
 public:
  FormatError(std::string field, const std::string& message);
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Bad command-line flag or config key. `key()` names the offending key.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string key, const std::string& message);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wraps an error raised inside a pipeline stage, tagging it with the stage.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message);
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace veinseg
