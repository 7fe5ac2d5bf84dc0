#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdeg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public Error {
public:
  explicit NotAGroup(const std::string& reason) : Error("not a group: " + reason) {}
};

class UnknownGroup : public Error {
public:
  explicit UnknownGroup(const std::string& expr) : Error("unknown group expression '" + expr + "'") {}
};

class NotNormal : public Error {
public:
  explicit NotNormal(const std::string& what) : Error("subgroup is not normal: " + what) {}
};

class CosetLimitExceeded : public Error {
public:
  explicit CosetLimitExceeded(std::size_t cap)
      : Error("coset limit exceeded (" + std::to_string(cap) + " live cosets)"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

class IncompatibleActions : public Error {
public:
  IncompatibleActions() : Error("H and K do not act compatibly on each other") {}
};

/// A theorem-backed invariant failed. Always an implementation bug.
class InternalCheckFailed : public Error {
public:
  explicit InternalCheckFailed(const std::string& name) : Error("internal check failed: " + name) {}
};

class ElementOutOfRange : public Error {
public:
  explicit ElementOutOfRange(const std::string& what) : Error("element out of range: " + what) {}
};

class InvalidPresentation : public Error {
public:
  explicit InvalidPresentation(const std::string& what) : Error("invalid presentation: " + what) {}
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
  ParseError(const std::string& source, std::size_t line, const std::string& reason)
      : Error(source + ":" + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace tdeg
