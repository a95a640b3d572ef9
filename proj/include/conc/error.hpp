#pragma once

#include <stdexcept>
#include <string>

namespace conc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (column > 0) out += "column " + std::to_string(column) + ": ";
    return out + what;
  }
  int line_;
  int column_;
};

/// A value violates a documented invariant or an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A name was not found in the active knot table.
class UnknownKnot : public DomainError {
 public:
  UnknownKnot(const std::string& name, const std::string& hint = "")
      : DomainError("unknown knot '" + name + "'" + (hint.empty() ? "" : " (" + hint + ")")),
        name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace conc
