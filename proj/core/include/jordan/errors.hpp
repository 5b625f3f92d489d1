#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symmetric eigensolver input that is not square or not symmetric.
class AsymmetricMatrixError : public Error {
 public:
  AsymmetricMatrixError(const std::string& what, double asymmetry)
      : Error(what), asymmetry_(asymmetry) {}
  double asymmetry() const { return asymmetry_; }

 private:
  double asymmetry_;
};

/// Element whose spectrum is not contained in {0, 1}.
class NotAProjectionError : public Error {
 public:
  NotAProjectionError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

class AlgebraMismatchError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// No automorphism exists (or none is constructible) between the requested atoms.
class NoAutomorphismError : public Error {
 public:
  using Error::Error;
};

}  // namespace jordan

namespace jordan {

/// Malformed algebra descriptor, element or report input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A sampled or Monte-Carlo computation could not reach a verdict within its
/// budget (for example, a spread or residual above threshold).
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

}  // namespace jordan
