#pragma once

#include <stdexcept>
#include <string>

namespace f4r {

// Input text or JSON that does not conform to the expected grammar/schema.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An operation's mathematical precondition is violated (divisibility,
// ambient mismatch, non-unit leading coefficient, ...).
class PreconditionError : public std::runtime_error {
  public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration/search budget would be exceeded.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace f4r
