#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cddembed {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  // The message without the position prefix.
  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ContainmentError : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown element label '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

class LoopContraction : public Error {
 public:
  explicit LoopContraction(const std::string& label)
      : Error("cannot contract loop '" + label + "'"), label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

// A minor schedule failed at a particular step (0-based index).
class ScheduleError : public Error {
 public:
  ScheduleError(std::size_t step, const std::string& what)
      : Error("schedule step " + std::to_string(step) + ": " + what),
        step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

// An input exceeds the size cap of an exhaustive routine.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class OverlapError : public Error {
 public:
  using Error::Error;
};

class DecompositionError : public Error {
 public:
  using Error::Error;
};

// Certificate replay failure; path names the offending node.
class CertificateError : public Error {
 public:
  CertificateError(const std::string& path, const std::string& what)
      : Error("certificate node " + path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class RepresentabilityError : public Error {
 public:
  using Error::Error;
};

// A runtime-checked inequality or structural property did not hold.
class AssertionFailure : public Error {
 public:
  AssertionFailure(const std::string& property, const std::string& context)
      : Error("property " + property + " violated: " + context),
        property_(property) {}
  const std::string& property() const { return property_; }

 private:
  std::string property_;
};

}  // namespace cddembed
