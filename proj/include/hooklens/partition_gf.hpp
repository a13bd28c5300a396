#pragma once

// P(q) = 1/(q;q)_∞ near q = 1: the modular transformation used on the major
// arc and the envelope bounding it on the minor arc.

#include <complex>
#include <vector>

namespace hooklens {

/// log P(e^{−z}) = −Σ_{k≥1} Log(1 − e^{−kz}), summed until the terms drop
/// below double resolution. Requires Re z > 0.
std::complex<double> log_partition_gf(std::complex<double> z);

struct MajorArcPair {
    std::complex<double> log_direct;       // log of (e^{−z}; e^{−z})_∞^{−1}
    std::complex<double> log_transformed;  // log of the transformed right-hand side

    std::complex<double> direct() const;
    std::complex<double> transformed() const;
    /// |transformed/direct − 1|, computed from the log difference so it stays
    /// finite when the values themselves overflow.
    double relative_difference() const;
};

/// Both sides of (e^{−z};e^{−z})_∞^{−1} = (z/2π)^{1/2} e^{(π/12)(2π/z − z/2π)} (e^{−4π²/z};e^{−4π²/z})_∞^{−1}.
MajorArcPair partition_gf_major_arc(std::complex<double> z);

/// √v · exp[(1/v)(π/12 − (1/2π)(1 − 1/√(1+M²)))].
double minor_arc_bound(double M, double v);
/// The exponent rate π/12 − (1/2π)(1 − 1/√(1+M²)).
double minor_arc_rate(double M);

struct MinorArcSample {
    double u = 0.0;
    double v = 0.0;
    double log_abs_p = 0.0;     // log |P(e^{2πi(u+iv)})|
    double log_bound = 0.0;     // log of minor_arc_bound(M, v)
    double log_ratio() const { return log_abs_p - log_bound; }
};

/// Samples τ = u + iv with Mv ≤ |u| ≤ 1/2 at `count` evenly spaced u, q = e^{2πiτ}.
std::vector<MinorArcSample> sample_minor_arc(double M, double v, int count);

}  // namespace hooklens
