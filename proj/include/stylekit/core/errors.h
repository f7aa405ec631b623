#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stylekit {

// Base of every error the toolkit raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A domain entity failed one of its invariants.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string field, std::string rule)
      : Error("invariant violation: " + field + ": " + rule),
        field_(std::move(field)),
        rule_(std::move(rule)) {}

  const std::string& field() const { return field_; }
  const std::string& rule() const { return rule_; }

 private:
  std::string field_;
  std::string rule_;
};

// Malformed text input. `offset` is a byte offset or a 1-based line number
// depending on the producer; `unit()` says which.
class ParseError : public Error {
 public:
  enum class Unit { kByte, kLine };

  ParseError(std::string message, std::size_t offset, Unit unit = Unit::kByte)
      : Error("parse error at " +
              std::string(unit == Unit::kByte ? "byte " : "line ") +
              std::to_string(offset) + ": " + message),
        offset_(offset),
        unit_(unit) {}

  std::size_t offset() const { return offset_; }
  Unit unit() const { return unit_; }

 private:
  std::size_t offset_;
  Unit unit_;
};

// Caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class BackendError : public Error {
 public:
  using Error::Error;
};

// Transport failure or 5xx after retries were exhausted.
class BackendUnavailable : public BackendError {
 public:
  using BackendError::BackendError;
};

// 4xx. Never retried.
class BackendRefused : public BackendError {
 public:
  BackendRefused(int status, const std::string& body)
      : BackendError("backend refused request with status " +
                     std::to_string(status) + ": " + body),
        status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

class MalformedReply : public BackendError {
 public:
  using BackendError::BackendError;
};

class EmptyReply : public BackendError {
 public:
  using BackendError::BackendError;
};

class InsufficientCandidates : public Error {
 public:
  using Error::Error;
};

class DuplicateStyle : public Error {
 public:
  explicit DuplicateStyle(const std::string& style)
      : Error("style already present in store: " + style) {}
};

class StyleMismatch : public Error {
 public:
  using Error::Error;
};

class TicketUnknown : public Error {
 public:
  explicit TicketUnknown(const std::string& id)
      : Error("unknown ticket: " + id) {}
};

class WrongSelectionCount : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

}  // namespace stylekit
