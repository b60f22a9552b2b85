#ifndef POIKM_ERRORS_HPP_
#define POIKM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace poikm {

//! Base class of every exception thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! A duplicate source or duplicate target in a partial permutation.
struct injectivity_error : error {
  using error::error;
};

//! A point outside {1, ..., n}.
struct range_error : error {
  using error::error;
};

//! Operands of different degree.
struct degree_error : error {
  using error::error;
};

//! Parameters outside an operation's domain (e.g. k < 2 where k >= 2 is
//! required), or a violated precondition.
struct parameter_error : error {
  using error::error;
};

//! Malformed textual input.
struct parse_error : error {
  using error::error;
};

//! An enumeration grew past its safety bound. Says nothing about whether
//! the enumerated object is infinite or merely large.
struct overflow_error : error {
  using error::error;
};

//! A search was refused because its cost estimate exceeds the budget.
struct budget_error : error {
  using error::error;
};

}  // namespace poikm

#endif  // POIKM_ERRORS_HPP_
