#include "hooklens/dilogarithm.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hooklens {

namespace {

using cd = std::complex<double>;

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;

cd series_small(cd z)
{
    // |z| ≤ 1/2: 0.5^k/k² reaches 1e-17 well before 60 terms.
    cd term = z;
    cd sum = 0.0;
    for (int k = 1; k <= 80; ++k) {
        sum += term / double(k * k);
        term *= z;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// Li₂(z) = Σ_{k≥0} B_k u^{k+1}/(k+1)!, u = −log(1−z); valid for |u| < 2π.
cd bernoulli_series(cd z)
{
    // B_k/(k+1)! for k = 0, 1, 2, 4, ..., 38 (odd k > 1 vanish).
    static constexpr std::array<double, 21> even_terms = {
        1.0 / 6.0 / 6.0,
        -1.0 / 30.0 / 120.0,
        1.0 / 42.0 / 5040.0,
        -1.0 / 30.0 / 362880.0,
        5.0 / 66.0 / 39916800.0,
        -691.0 / 2730.0 / 6227020800.0,
        7.0 / 6.0 / 1307674368000.0,
        -3617.0 / 510.0 / 355687428096000.0,
        43867.0 / 798.0 / 121645100408832000.0,
        -174611.0 / 330.0 / 51090942171709440000.0,
        854513.0 / 138.0 / 25852016738884976640000.0,
        -236364091.0 / 2730.0 / 15511210043330985984000000.0,
        8553103.0 / 6.0 / 10888869450418352160768000000.0,
        -23749461029.0 / 870.0 / 8841761993739701954543616000000.0,
        8615841276005.0 / 14322.0 / 8222838654177922817725562880000000.0,
        -7709321041217.0 / 510.0 / 8683317618811886495518194401280000000.0,
        2577687858367.0 / 6.0 / 10333147966386144929666651337523200000000.0,
        -26315271553053477373.0 / 1919190.0 / 13763753091226345046315979581580902400000000.0,
        2929993913841559.0 / 6.0 / 20397882081197443358640281739902897356800000000.0,
        -261082718496449122051.0 / 13530.0 / 33452526613163807108170062053440751665152000000000.0,
        0.0,
    };
    const cd u = -std::log(1.0 - z);
    const cd u2 = u * u;
    // k = 0 and k = 1 terms: u − u²/4.
    cd sum = u - u2 / 4.0;
    cd power = u * u2;  // u^{k+1} for k = 2
    for (double c : even_terms) {
        if (c == 0.0) {
            break;
        }
        const cd t = c * power;
        sum += t;
        if (std::abs(t) < 1e-18 * std::abs(sum)) {
            break;
        }
        power *= u2;
    }
    return sum;
}

// Li₂ on the closed unit disk.
cd in_disk(cd z)
{
    if (std::abs(z) <= 0.5) {
        return series_small(z);
    }
    if (z.real() > 0.5) {
        // Reflection: Li₂(z) = π²/6 − log z log(1−z) − Li₂(1−z); here |1−z| < 1
        // and Re(1−z) < 1/2, so the Bernoulli series applies to 1−z.
        if (z == cd(1.0, 0.0)) {
            return kPi2Over6;
        }
        const cd w = 1.0 - z;
        return kPi2Over6 - std::log(z) * std::log(w) - bernoulli_series(w);
    }
    return bernoulli_series(z);
}

}  // namespace

std::complex<double> dilogarithm(std::complex<double> z)
{
    if (z.imag() == 0.0 && z.real() > 1.0) {
        throw std::domain_error("dilogarithm: argument on the branch cut (1, inf)");
    }
    if (std::abs(z) <= 1.0) {
        return in_disk(z);
    }
    // Inversion: Li₂(z) = −π²/6 − ½ log²(−z) − Li₂(1/z), z ∉ (0, 1].
    const cd l = std::log(-z);
    return -kPi2Over6 - 0.5 * l * l - in_disk(1.0 / z);
}

std::complex<double> dilogarithm_series(std::complex<double> z, int max_terms)
{
    if (std::abs(z) > 1.0) {
        throw std::domain_error("dilogarithm_series: |z| > 1");
    }
    cd term = z;
    cd sum = 0.0;
    const double r = std::abs(z);
    for (int k = 1; k <= max_terms; ++k) {
        sum += term / (double(k) * double(k));
        term *= z;
        // tail after k is at most |z|^{k+1} / ((k+1)²(1 − |z|))
        const double kk = double(k + 1) * double(k + 1);
        if (r < 1.0 && std::abs(term) / (kk * (1.0 - r)) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

}  // namespace hooklens
