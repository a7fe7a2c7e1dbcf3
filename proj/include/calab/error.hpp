#pragma once

#include <stdexcept>
#include <string>

namespace calab {

// Base of every error raised by the library. The CLI maps the subclasses
// onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input shape: dimension mismatch, non-finite entries, malformed spec.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A desk-scale guard (dimension, state space, horizon) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// A lemma's hypothesis does not hold, so it yields no bound.
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

// The family is not (certifiably) equivalent to an l1 basis.
class NotAnIsomorphism : public Error {
 public:
  using Error::Error;
};

// Subshift with no infinite admissible sequences.
class EmptySystem : public Error {
 public:
  using Error::Error;
};

class InsufficientWindow : public Error {
 public:
  using Error::Error;
};

}  // namespace calab
