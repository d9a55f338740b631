#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rcyclic {

/// Invalid argument value (index out of range, bad constant, mismatched sizes).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point that does not belong to the space it is used with.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation was called before its mathematical precondition was established.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// No admissible pair with positive distance exists, so a ratio is undefined.
class DegenerateInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proved certificate was contradicted by a runtime inequality check.
class CertificateInconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance document error, positioned by line and field.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : std::runtime_error(format(line, field, message)), line_(line), field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field, const std::string& message) {
    std::string out = "line " + std::to_string(line);
    if (!field.empty()) out += ": field `" + field + "`";
    return out + ": " + message;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace rcyclic
