#pragma once

#include <stdexcept>
#include <string>

namespace drst {

// Machine-readable failure categories. The CLI echoes the category on stderr
// and maps it to an exit code.
enum class ErrorCategory {
  ParseError,
  ValidationError,
  IoError,
  DanglingReference,
  BrokenRoute,
  NoStops,
  OffsetOutOfRange,
  NonPositiveRate,
  EmptyPopulation,
  NoCandidate,
  NoFlexRoutes,
  NotAtDiversionNode,
  NoPassengers,
  CapacityOutOfRange,
  MalformedLog,
};

inline const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::ParseError: return "ParseError";
    case ErrorCategory::ValidationError: return "ValidationError";
    case ErrorCategory::IoError: return "IoError";
    case ErrorCategory::DanglingReference: return "DanglingReference";
    case ErrorCategory::BrokenRoute: return "BrokenRoute";
    case ErrorCategory::NoStops: return "NoStops";
    case ErrorCategory::OffsetOutOfRange: return "OffsetOutOfRange";
    case ErrorCategory::NonPositiveRate: return "NonPositiveRate";
    case ErrorCategory::EmptyPopulation: return "EmptyPopulation";
    case ErrorCategory::NoCandidate: return "NoCandidate";
    case ErrorCategory::NoFlexRoutes: return "NoFlexRoutes";
    case ErrorCategory::NotAtDiversionNode: return "NotAtDiversionNode";
    case ErrorCategory::NoPassengers: return "NoPassengers";
    case ErrorCategory::CapacityOutOfRange: return "CapacityOutOfRange";
    case ErrorCategory::MalformedLog: return "MalformedLog";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(std::string(to_string(category)) + ": " + message),
        category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

}  // namespace drst
