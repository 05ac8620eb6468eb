#include "medianlab/error.hpp"

namespace medianlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SizeOverflow: return "SizeOverflow";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotMedian: return "NotMedian";
    case ErrorKind::TooManyHyperplanes: return "TooManyHyperplanes";
    case ErrorKind::ModelMismatch: return "ModelMismatch";
    case ErrorKind::NonDyadicInput: return "NonDyadicInput";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::CocycleInvalid: return "CocycleInvalid";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace medianlab
