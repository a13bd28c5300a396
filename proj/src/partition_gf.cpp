#include "hooklens/partition_gf.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hooklens {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// 1 − e^{−w} without cancellation for small |w|.
cd one_minus_exp_neg(cd w)
{
    // e^{−w} − 1 = e^{−x}cos y − 1 − i e^{−x} sin y, with e^{−x}cos y − 1
    // rewritten as expm1(−x) cos y − 2 sin²(y/2).
    const double x = w.real();
    const double y = w.imag();
    const double s = std::sin(0.5 * y);
    const double re = std::expm1(-x) * std::cos(y) - 2.0 * s * s;
    const double im = -std::exp(-x) * std::sin(y);
    return -cd(re, im);
}

// −Σ Log(1 − e^{−kz}) for Re z > 0.
cd log_inverse_pochhammer(cd z)
{
    cd sum = 0.0;
    for (long k = 1;; ++k) {
        const cd w = double(k) * z;
        if (w.real() > 745.0) {
            break;
        }
        const cd term = std::log(one_minus_exp_neg(w));
        sum -= term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum)) && w.real() > 1.0) {
            break;
        }
    }
    return sum;
}

}  // namespace

cd log_partition_gf(cd z)
{
    if (!(z.real() > 0.0)) {
        throw std::domain_error("log_partition_gf: need Re z > 0");
    }
    return log_inverse_pochhammer(z);
}

cd MajorArcPair::direct() const
{
    return std::exp(log_direct);
}

cd MajorArcPair::transformed() const
{
    return std::exp(log_transformed);
}

double MajorArcPair::relative_difference() const
{
    const cd d = log_transformed - log_direct;
    // exp(d) − 1 accurately for small d.
    const double s = std::sin(0.5 * d.imag());
    const cd em1(std::expm1(d.real()) * std::cos(d.imag()) - 2.0 * s * s, std::exp(d.real()) * std::sin(d.imag()));
    return std::abs(em1);
}

MajorArcPair partition_gf_major_arc(cd z)
{
    if (!(z.real() > 0.0)) {
        throw std::domain_error("partition_gf_major_arc: need Re z > 0");
    }
    MajorArcPair out;
    out.log_direct = log_inverse_pochhammer(z);
    const cd dual = 4.0 * kPi * kPi / z;
    out.log_transformed = 0.5 * std::log(z / (2.0 * kPi)) + (kPi / 12.0) * (2.0 * kPi / z - z / (2.0 * kPi)) +
                          log_inverse_pochhammer(dual);
    return out;
}

double minor_arc_rate(double M)
{
    return kPi / 12.0 - (1.0 / (2.0 * kPi)) * (1.0 - 1.0 / std::sqrt(1.0 + M * M));
}

double minor_arc_bound(double M, double v)
{
    if (!(M > 0.0) || !(v > 0.0)) {
        throw std::invalid_argument("minor_arc_bound: need M > 0 and v > 0");
    }
    return std::sqrt(v) * std::exp(minor_arc_rate(M) / v);
}

std::vector<MinorArcSample> sample_minor_arc(double M, double v, int count)
{
    if (!(M > 0.0) || !(v > 0.0) || count < 2 || M * v > 0.5) {
        throw std::invalid_argument("sample_minor_arc: need M > 0, v > 0, Mv <= 1/2, count >= 2");
    }
    std::vector<MinorArcSample> out;
    out.reserve(static_cast<std::size_t>(count));
    const double lo = M * v;
    const double log_bound = 0.5 * std::log(v) + minor_arc_rate(M) / v;
    for (int i = 0; i < count; ++i) {
        MinorArcSample s;
        s.u = lo + (0.5 - lo) * i / (count - 1);
        s.v = v;
        // q = e^{2πiτ} = e^{−z} with z = 2πv − 2πiu.
        const cd z(2.0 * kPi * v, -2.0 * kPi * s.u);
        s.log_abs_p = log_inverse_pochhammer(z).real();
        s.log_bound = log_bound;
        out.push_back(s);
    }
    return out;
}

}  // namespace hooklens
