#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace exante {

enum class ErrorCode {
  MalformedDate,
  ImpossibleDate,
  DuplicateId,
  DuplicateTemplateId,
  MissingSlot,
  EmptyQuery,
  IncompleteCatalog,
  AuthError,
  RateLimited,
  ProviderError,
  Timeout,
  UnknownTopic,
  MissingVerdict,
  EmptyRationale,
  WrongTaskKind,
  UnparsableJudgment,
  MissingCell,
  ZeroClaims,
  ConfigError,
  IoError,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDate: return "MalformedDate";
    case ErrorCode::ImpossibleDate: return "ImpossibleDate";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DuplicateTemplateId: return "DuplicateTemplateId";
    case ErrorCode::MissingSlot: return "MissingSlot";
    case ErrorCode::EmptyQuery: return "EmptyQuery";
    case ErrorCode::IncompleteCatalog: return "IncompleteCatalog";
    case ErrorCode::AuthError: return "AuthError";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::ProviderError: return "ProviderError";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::UnknownTopic: return "UnknownTopic";
    case ErrorCode::MissingVerdict: return "MissingVerdict";
    case ErrorCode::EmptyRationale: return "EmptyRationale";
    case ErrorCode::WrongTaskKind: return "WrongTaskKind";
    case ErrorCode::UnparsableJudgment: return "UnparsableJudgment";
    case ErrorCode::MissingCell: return "MissingCell";
    case ErrorCode::ZeroClaims: return "ZeroClaims";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

/// Exception carrying a machine-checkable code next to the human message.
/// Provider failures additionally carry the HTTP status and response body.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  Error(ErrorCode code, const std::string& message, int status, std::string body)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        status_(status),
        body_(std::move(body)) {}

  ErrorCode code() const noexcept { return code_; }
  int status() const noexcept { return status_; }
  const std::string& body() const noexcept { return body_; }

 private:
  ErrorCode code_;
  int status_ = 0;
  std::string body_;
};

}  // namespace exante
