// Copyright (c) 2026 The tailcore authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tailcore {

enum class ErrorCode {
  BLOCK_MISMATCH,
  NOT_SELF_ADJOINT,
  RANK_TOL_AMBIGUOUS,
  NOT_UNITAL,
  NEGATIVE_ENTRY,
  KRAUS_NOT_UNITAL,
  PERIPHERAL_DEFECTIVE,
  SPECTRAL_GAP_AMBIGUOUS,
  NOT_INVERTIBLE,
  NOT_IN_TAIL,
  GRAM_NOT_PSD,
  ITERATION_OVERFLOW,
  NOT_JORDAN_CLOSED,
  NO_UNIT_EIGENVALUE,
  NOT_CONVERGED,
  GOLDEN_MISMATCH,
  SCHEMA_VIOLATION,
};

const char* to_string(ErrorCode code);

/// Exit-code categories used by the CLI: input errors map to 2,
/// numerical-tolerance signals to 3.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tailcore
