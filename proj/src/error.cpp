// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#include "tailcore/error.hpp"

namespace tailcore {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BLOCK_MISMATCH: return "BLOCK_MISMATCH";
    case ErrorCode::NOT_SELF_ADJOINT: return "NOT_SELF_ADJOINT";
    case ErrorCode::RANK_TOL_AMBIGUOUS: return "RANK_TOL_AMBIGUOUS";
    case ErrorCode::NOT_UNITAL: return "NOT_UNITAL";
    case ErrorCode::NEGATIVE_ENTRY: return "NEGATIVE_ENTRY";
    case ErrorCode::KRAUS_NOT_UNITAL: return "KRAUS_NOT_UNITAL";
    case ErrorCode::PERIPHERAL_DEFECTIVE: return "PERIPHERAL_DEFECTIVE";
    case ErrorCode::SPECTRAL_GAP_AMBIGUOUS: return "SPECTRAL_GAP_AMBIGUOUS";
    case ErrorCode::NOT_INVERTIBLE: return "NOT_INVERTIBLE";
    case ErrorCode::NOT_IN_TAIL: return "NOT_IN_TAIL";
    case ErrorCode::GRAM_NOT_PSD: return "GRAM_NOT_PSD";
    case ErrorCode::ITERATION_OVERFLOW: return "ITERATION_OVERFLOW";
    case ErrorCode::NOT_JORDAN_CLOSED: return "NOT_JORDAN_CLOSED";
    case ErrorCode::NO_UNIT_EIGENVALUE: return "NO_UNIT_EIGENVALUE";
    case ErrorCode::NOT_CONVERGED: return "NOT_CONVERGED";
    case ErrorCode::GOLDEN_MISMATCH: return "GOLDEN_MISMATCH";
    case ErrorCode::SCHEMA_VIOLATION: return "SCHEMA_VIOLATION";
  }
  return "UNKNOWN";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::BLOCK_MISMATCH:
    case ErrorCode::NOT_SELF_ADJOINT:
    case ErrorCode::NOT_UNITAL:
    case ErrorCode::NEGATIVE_ENTRY:
    case ErrorCode::KRAUS_NOT_UNITAL:
    case ErrorCode::NOT_JORDAN_CLOSED:
    case ErrorCode::NOT_IN_TAIL:
    case ErrorCode::SCHEMA_VIOLATION:
      return true;
    default:
      return false;
  }
}

}  // namespace tailcore
