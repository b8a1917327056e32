#pragma once

#include <stdexcept>
#include <string>

namespace gitstab {

/// Base class for every error raised by the library. `kind()` is the short
/// machine-readable tag used in structured CLI error reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct ShapeError : Error {
  explicit ShapeError(const std::string& what) : Error("shape", what) {}
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error("domain", what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error("precondition", what) {}
};

struct SizeError : Error {
  explicit SizeError(const std::string& what) : Error("size", what) {}
};

struct SamplingError : Error {
  explicit SamplingError(const std::string& what) : Error("sampling", what) {}
};

}  // namespace gitstab
