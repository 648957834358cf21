#pragma once

#include <stdexcept>
#include <string>

namespace hfree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A pattern lacks a structural property a construction needs.
class RequirementError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class GuardExceeded : public Error {
 public:
  using Error::Error;
};

class SearchLimitExceeded : public Error {
 public:
  using Error::Error;
};

class GadgetContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace hfree
