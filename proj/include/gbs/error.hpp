#pragma once

#include <stdexcept>
#include <string>

namespace gbs {

enum class ErrorKind {
  Syntax,
  Validation,
  UnknownGenerator,
  PreconditionViolated,
  NotUnimodular,
  CertificateFailure,
  NotSolvableForm,
  TrivialWordRejected,
  InconsistentCosetTable,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Input problems (bad documents, bad words) as opposed to failed
  // preconditions or internal inconsistencies.
  bool is_input_error() const noexcept {
    return kind_ == ErrorKind::Syntax || kind_ == ErrorKind::Validation ||
           kind_ == ErrorKind::UnknownGenerator;
  }

 private:
  ErrorKind kind_;
};

}  // namespace gbs
