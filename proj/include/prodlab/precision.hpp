#pragma once

#include <mpfr.h>

#include "prodlab/errors.hpp"

namespace prodlab {

// Explicit precision context threaded through every operation; there is no
// global mutable precision state anywhere in the library.
//
// target_bits is the mantissa accuracy the caller wants certified;
// guard_bits is the extra working headroom used to absorb intermediate
// rounding before the final result is formed.
struct Precision {
  int target_bits = 128;
  int guard_bits = 32;

  void validate() const {
    if (target_bits < 53)
      throw PrecisionError("target_bits must be >= 53, got " +
                           std::to_string(target_bits));
    if (guard_bits < 16)
      throw PrecisionError("guard_bits must be >= 16, got " +
                           std::to_string(guard_bits));
  }

  // Working mantissa size for intermediate computation.
  mpfr_prec_t working() const {
    validate();
    return static_cast<mpfr_prec_t>(target_bits) + guard_bits;
  }
};

}  // namespace prodlab
