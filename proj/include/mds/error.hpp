#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Geometric generator gave up before producing a connected placement.
class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(std::size_t attempts)
      : Error("no connected placement after " + std::to_string(attempts) + " attempts"),
        attempts_(attempts) {}

  std::size_t attempts() const noexcept { return attempts_; }

 private:
  std::size_t attempts_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(unsigned long long budget)
      : Error("search budget of " + std::to_string(budget) + " nodes exceeded"), budget_(budget) {}

  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

/// Statistical test has nothing to work with (e.g. every paired difference is zero).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

}  // namespace mds
