#pragma once

#include <stdexcept>
#include <string>

namespace braidhom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not describe a graph (bad syntax, undeclared ids, ...).
class MalformedInputError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain of an operation (e.g. star(0)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Reference to a vertex, edge or half-edge that does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on arguments violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The graph is outside the class an operation supports.
class UnsupportedGraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidhom
