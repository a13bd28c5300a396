#pragma once

#include <complex>

namespace hooklens {

/// Principal-branch Li₂(z), cut on (1, ∞). Throws std::domain_error for real z > 1.
std::complex<double> dilogarithm(std::complex<double> z);

/// Li₂ by its defining series Σ z^k/k², only for |z| ≤ 1. Slow near |z| = 1;
/// meant as an independent check of dilogarithm().
std::complex<double> dilogarithm_series(std::complex<double> z, int max_terms = 2000000);

}  // namespace hooklens
