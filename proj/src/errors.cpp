#include "safeset/errors.hpp"

namespace safeset {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::BadVertexId: return "BadVertexId";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::WeightOverflow: return "WeightOverflow";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::BudgetOverflow: return "BudgetOverflow";
    case ErrorKind::CapTooLarge: return "CapTooLarge";
    case ErrorKind::NotExtensible: return "NotExtensible";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotBlockGraph: return "NotBlockGraph";
    case ErrorKind::SearchStalled: return "SearchStalled";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(int line, const std::string& reason)
    : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + reason), line_(line) {}

}  // namespace safeset
