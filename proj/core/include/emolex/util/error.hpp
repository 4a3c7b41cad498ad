#pragma once

#include <stdexcept>
#include <string>

namespace emolex {

enum class ErrorKind {
  invalid_argument,
  not_found,
  conflict,
  rejected,
  config,
  io,
  insufficient_data,
  undefined,
};

/// Base of every error the library throws. `kind()` lets callers (the HTTP
/// layer, the CLI) map failures to status codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define EMOLEX_DEFINE_ERROR(Name, Kind)                                        \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {}   \
  };

EMOLEX_DEFINE_ERROR(InvalidArgumentError, invalid_argument)
EMOLEX_DEFINE_ERROR(NotFoundError, not_found)
EMOLEX_DEFINE_ERROR(ConflictError, conflict)
EMOLEX_DEFINE_ERROR(RejectedError, rejected)
EMOLEX_DEFINE_ERROR(ConfigError, config)
EMOLEX_DEFINE_ERROR(IoError, io)
EMOLEX_DEFINE_ERROR(InsufficientDataError, insufficient_data)
EMOLEX_DEFINE_ERROR(UndefinedValueError, undefined)

#undef EMOLEX_DEFINE_ERROR

}  // namespace emolex
