#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cfloer {

// Every error raised by the library derives from this, so callers that only
// care about "the input was bad" can catch a single type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class NotAComplex : public Error {
 public:
  using Error::Error;
};

class DegenerateDisc : public Error {
 public:
  using Error::Error;
};

class FrameError : public Error {
 public:
  using Error::Error;
};

class UndersampledLoop : public Error {
 public:
  using Error::Error;
};

class ChartError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised by the cocycle solver; carries the index sets whose cocycle
/// equation failed, each rendered as "{j1,j2,...}".
class NoSolution : public Error {
 public:
  NoSolution(const std::string& what, std::vector<std::string> violated)
      : Error(what), violated_(std::move(violated)) {}
  const std::vector<std::string>& violated() const noexcept { return violated_; }

 private:
  std::vector<std::string> violated_;
};

}  // namespace cfloer
