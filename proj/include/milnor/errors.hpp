#ifndef MILNOR_ERRORS_HPP
#define MILNOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace milnor {

// Malformed or structurally inconsistent input: bad tokens, rank or
// dimension mismatches, invalid Seifert matrices.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a mathematical hypothesis of the
// operation, e.g. a longitude with nonzero exponent sum.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two independent evaluation routes disagreed. Never expected; signals a
// defect rather than bad input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace milnor

#endif  // MILNOR_ERRORS_HPP
