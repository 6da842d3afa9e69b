#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tperf {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The input is larger than the configured cap of the operation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Vertex index or label is not part of the graph.
class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(long long v)
      : Error("unknown vertex " + std::to_string(v)), vertex(v) {}
  long long vertex;
};

// A postcondition audit failed. Carries the offending structure when one
// exists (for example an odd cycle that survived a reduction).
class VerificationFailure : public Error {
 public:
  VerificationFailure(const std::string& what, std::vector<int> evidence = {})
      : Error(what), evidence(std::move(evidence)) {}
  std::vector<int> evidence;
};

class Unbounded : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input. `offset` is the byte (or line, for line
// oriented formats) where decoding stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at offset " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

}  // namespace tperf
