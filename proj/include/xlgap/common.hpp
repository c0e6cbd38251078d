#ifndef XLGAP_COMMON_HPP_
#define XLGAP_COMMON_HPP_

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace xlgap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files or values (bad header, ragged row, NaN, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operation preconditions violated (mismatched shapes, empty input,
// out-of-domain parameters).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exact/enumerative routine.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures (unreadable or unwritable paths).
class IoError : public Error {
 public:
  using Error::Error;
};

// Numeric failures surfaced as errors only on request (e.g. Sinkhorn
// non-convergence under a strict CLI run).
class NumericError : public Error {
 public:
  using Error::Error;
};

// ISO-639-3 style language tag: non-empty, lowercase ASCII alphanumeric.
class LanguageId {
 public:
  LanguageId() = default;
  explicit LanguageId(std::string code);

  const std::string& code() const { return code_; }

  friend bool operator==(const LanguageId&, const LanguageId&) = default;
  friend auto operator<=>(const LanguageId&, const LanguageId&) = default;

 private:
  std::string code_;
};

}  // namespace xlgap

#endif  // XLGAP_COMMON_HPP_
