#include "veinseg/error.hpp"

#include <utility>

namespace veinseg {

FormatError::FormatError(std::string field, const std::string& message)
    : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

UsageError::UsageError(std::string key, const std::string& message)
    : std::runtime_error(key.empty() ? message : key + ": " + message),
      key_(std::move(key)) {}

StageError::StageError(std::string stage, const std::string& message)
    : std::runtime_error("stage " + stage + ": " + message),
      stage_(std::move(stage)) {}

}  // namespace veinseg
