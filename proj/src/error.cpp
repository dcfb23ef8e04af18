#include "ipd/error.hpp"

namespace ipd {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::MalformedInput: return "MalformedInput";
  case ErrorCode::NotAPermutation: return "NotAPermutation";
  case ErrorCode::ArityMismatch: return "ArityMismatch";
  case ErrorCode::NoSimpleOfThatSize: return "NoSimpleOfThatSize";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::MissingTrivial: return "MissingTrivial";
  case ErrorCode::InvalidPoset: return "InvalidPoset";
  case ErrorCode::NotBinary: return "NotBinary";
  case ErrorCode::NotFramed: return "NotFramed";
  case ErrorCode::HasQuadrilateral: return "HasQuadrilateral";
  case ErrorCode::HasCrossings: return "HasCrossings";
  case ErrorCode::CutsNotComplete: return "CutsNotComplete";
  case ErrorCode::QuadrilateralFace: return "QuadrilateralFace";
  case ErrorCode::BadDecomposition: return "BadDecomposition";
  case ErrorCode::DegenerateSize: return "DegenerateSize";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::OutOfDomain: return "OutOfDomain";
  }
  return "Unknown";
}

} // namespace ipd
