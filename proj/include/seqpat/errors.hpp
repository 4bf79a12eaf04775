#pragma once

#include <stdexcept>
#include <string>

namespace seqpat {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SymbolOutOfRange : public Error {
public:
  using Error::Error;
};

class EmptySequence : public Error {
public:
  using Error::Error;
};

/// A permutation of order m was applied to a sequence of level l != m.
class LevelMismatch : public Error {
public:
  using Error::Error;
};

/// Operands disagree on length, level, or cross-section width.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

/// Wrong number of sequences for the operation (k < 2, or k != 2 where a pair is required).
class ArityError : public Error {
public:
  using Error::Error;
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

class NotConnected : public Error {
public:
  using Error::Error;
};

class TooManySections : public Error {
public:
  using Error::Error;
};

class NotInFirstClass : public Error {
public:
  using Error::Error;
};

class SearchSpaceTooLarge : public Error {
public:
  using Error::Error;
};

} // namespace seqpat
