#ifndef KNESER_ERRORS_HPP
#define KNESER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kneser {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: bad sizes, indices, parameters. The CLI maps
// these to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

class DomainError : public UsageError {
 public:
  using UsageError::UsageError;
};

class CardinalityError : public UsageError {
 public:
  using UsageError::UsageError;
};

class RankError : public UsageError {
 public:
  using UsageError::UsageError;
};

class IndexError : public UsageError {
 public:
  using UsageError::UsageError;
};

class NullGraphError : public UsageError {
 public:
  using UsageError::UsageError;
};

class AdjacencyError : public UsageError {
 public:
  using UsageError::UsageError;
};

class ConnectionSetError : public UsageError {
 public:
  using UsageError::UsageError;
};

class SizeLimitError : public UsageError {
 public:
  using UsageError::UsageError;
};

class OrderCapExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

class NeedEnumerationError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DisconnectedError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A verified claim did not hold. The CLI maps these to exit code 1.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

class FamilyInvariantError : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

class StructureError : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

class IsomorphismError : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

// A vertex map that was supposed to be an automorphism is not.
class NotAnAutomorphism : public AssertionFailure {
 public:
  using AssertionFailure::AssertionFailure;
};

}  // namespace kneser

#endif  // KNESER_ERRORS_HPP
