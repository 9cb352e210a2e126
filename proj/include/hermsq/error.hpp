#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermsq {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

class NotMonomial : public Error {
  public:
    NotMonomial() : Error("not a monomial scalar") {}
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class SingularMatrix : public Error {
  public:
    using Error::Error;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

/// Raised when a symbolic expansion would exceed the configured degree/size caps.
class ResourceLimit : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position_(pos) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Malformed structured input; path locates the offending node (e.g. "/witnesses/0/1").
class SchemaError : public Error {
  public:
    SchemaError(const std::string& path, const std::string& what)
        : Error((path.empty() ? std::string("/") : path) + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

  private:
    std::string path_;
};

}  // namespace hermsq
