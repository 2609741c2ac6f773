#pragma once

#include <stdexcept>
#include <string>

namespace spanlift {

enum class ErrorKind {
  // diagram notation
  MalformedTuple,
  DanglingArc,
  NonPlanar,
  MalformedCode,
  NonRealizable,
  // states and surfaces
  SplitDomainMismatch,
  NonIntegerGenus,
  BoundExceeded,
  // genus optimization
  NotReduced,
  NotAlternating,
  Disconnected,
  OddSlope,
  // census
  SchemaError,
  DiagramInvalid,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedTuple: return "MalformedTuple";
    case ErrorKind::DanglingArc: return "DanglingArc";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::MalformedCode: return "MalformedCode";
    case ErrorKind::NonRealizable: return "NonRealizable";
    case ErrorKind::SplitDomainMismatch: return "SplitDomainMismatch";
    case ErrorKind::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::OddSlope: return "OddSlope";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::DiagramInvalid: return "DiagramInvalid";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spanlift
