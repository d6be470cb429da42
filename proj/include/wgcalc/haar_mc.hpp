#pragma once

#include <cstdint>

#include "wgcalc/integrals.hpp"

namespace wgcalc {

/// Monte Carlo estimate of a Haar-unitary monomial integral. This is the one
/// floating-point corner of the library; it exists to validate the exact path.
struct McEstimate {
    double mean_re = 0.0;
    double mean_im = 0.0;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    long samples = 0;
};

/// Haar sampling by QR of a complex Ginibre matrix with the R-diagonal phase
/// correction. Deterministic for a fixed seed.
McEstimate haar_mc_oracle(const MonomialSpec& m, long samples, uint64_t seed);

}  // namespace wgcalc
