#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dcn {

/// Base class for every domain failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonFinite : public Error {
 public:
  NonFinite() : Error("NonFinite: value is NaN or infinite") {}
};

/// Raised when |p0| is too small to divide by.
class SingularDcn : public Error {
 public:
  explicit SingularDcn(const std::string& what)
      : Error("SingularDcn: " + what) {}
};

class NotUnit : public Error {
 public:
  explicit NotUnit(double norm);
};

/// The weighted sum inside a blend has (numerically) zero norm.
class DegenerateBlend : public Error {
 public:
  explicit DegenerateBlend(double norm,
                           std::optional<std::size_t> vertex = std::nullopt);

  double norm() const { return norm_; }
  std::optional<std::size_t> vertex() const { return vertex_; }

 private:
  double norm_;
  std::optional<std::size_t> vertex_;
};

/// A rotation by pi combined with a translation has no principal logarithm.
class LogSingular : public Error {
 public:
  LogSingular() : Error("LogSingular: rotation by pi with nonzero translation") {}
};

class NotRigid : public Error {
 public:
  explicit NotRigid(const std::string& what) : Error("NotRigid: " + what) {}
};

/// Malformed mesh, probe, weight or JSON payload.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what)
      : Error("InvalidInput: " + what) {}
};

}  // namespace dcn
