#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The argument had to be prime and is not. `witness` holds a factor or a
// compositeness witness when one was cheap to keep, "" otherwise.
class NotPrimeError : public Error {
 public:
  NotPrimeError(const std::string& what, std::string witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

// 1/3 has no purely periodic ternary expansion; operations on the digit
// stream reject p = 3 explicitly rather than looping forever.
class DivisibleByThreeError : public Error {
 public:
  using Error::Error;
};

// Interval bounds that do not describe a non-empty open interval.
class BadIntervalError : public Error {
 public:
  using Error::Error;
};

// A size cap (trit budget, order materialization cap) would be exceeded.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Malformed argument outside the other categories.
class BadArgumentError : public Error {
 public:
  using Error::Error;
};

// A b-file line that is not blank, not a comment, and not `index value`.
class MalformedLineError : public Error {
 public:
  MalformedLineError(const std::string& what, std::size_t line_number)
      : Error(what), line_number_(line_number) {}
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

// b-file indices must be strictly increasing.
class NonMonotonicIndexError : public Error {
 public:
  NonMonotonicIndexError(const std::string& what, std::size_t line_number)
      : Error(what), line_number_(line_number) {}
  std::size_t line_number() const noexcept { return line_number_; }

 private:
  std::size_t line_number_;
};

// The three characterizations of the same prime did not agree. This is a
// hard internal failure: the message carries a full diagnostic dump.
class DisagreementError : public Error {
 public:
  using Error::Error;
};

}  // namespace cantor
