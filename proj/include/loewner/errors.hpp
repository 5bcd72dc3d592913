// Copyright (c) 2026 the loewner developers. See the top-level LICENSE file
// for details.
//
// SPDX-License-Identifier: Apache-2.0

#ifndef LOEWNER_ERRORS_HPP
#define LOEWNER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace loewner {

// Base of all toolkit errors. `kind()` is a stable short tag used in CLI
// diagnostics and sweep status columns.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string msg)
      : std::runtime_error(kind + ": " + msg),
        kind_(std::move(kind)),
        message_(std::move(msg)) {}
  const std::string& kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string kind_;
  std::string message_;
};

// Bad inputs, shapes, ranges, or file contents. CLI exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Conditions discovered during numerical work. CLI exit code 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

#define LOEWNER_DEFINE_ERROR(NAME, BASE)                            \
  class NAME : public BASE {                                        \
   public:                                                          \
    explicit NAME(const std::string& msg) : BASE(#NAME, msg) {}     \
  }

LOEWNER_DEFINE_ERROR(InvalidSystem, ValidationError);
LOEWNER_DEFINE_ERROR(InvalidRange, ValidationError);
LOEWNER_DEFINE_ERROR(InvalidData, ValidationError);
LOEWNER_DEFINE_ERROR(DimensionTooLarge, ValidationError);
LOEWNER_DEFINE_ERROR(DimensionMismatch, ValidationError);
LOEWNER_DEFINE_ERROR(DuplicateFrequency, ValidationError);
LOEWNER_DEFINE_ERROR(IndexOutOfRange, ValidationError);
LOEWNER_DEFINE_ERROR(TooFewSamples, ValidationError);
LOEWNER_DEFINE_ERROR(ParseError, ValidationError);
LOEWNER_DEFINE_ERROR(SchemaMismatch, ValidationError);
LOEWNER_DEFINE_ERROR(ROutOfRange, ValidationError);
LOEWNER_DEFINE_ERROR(NotImaginaryAxis, ValidationError);
LOEWNER_DEFINE_ERROR(PairingError, ValidationError);
LOEWNER_DEFINE_ERROR(CoincidentPoints, ValidationError);

LOEWNER_DEFINE_ERROR(SingularPencil, NumericalError);
LOEWNER_DEFINE_ERROR(PoleHit, NumericalError);
LOEWNER_DEFINE_ERROR(SingularEt, NumericalError);
LOEWNER_DEFINE_ERROR(RealifyResidueTooLarge, NumericalError);

#undef LOEWNER_DEFINE_ERROR

}  // namespace loewner

#endif  // LOEWNER_ERRORS_HPP
