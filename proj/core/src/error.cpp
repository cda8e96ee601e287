#include "specjump/error.hpp"

namespace specjump {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Schema: return "SchemaError";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::UnknownComponent: return "UnknownComponent";
    case ErrorKind::NonRationalCenter: return "NonRationalCenter";
    case ErrorKind::BlowupLimitExceeded: return "BlowupLimitExceeded";
    case ErrorKind::FactorDegreeExceeded: return "FactorDegreeExceeded";
    case ErrorKind::MissingCharts: return "MissingCharts";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::OracleRefused: return "OracleRefused";
  }
  return "Error";
}

}  // namespace specjump
