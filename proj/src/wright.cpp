#include "hooklens/wright.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hooklens {

namespace {

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// sign of Γ(x) for x not a pole
int gamma_sign(double x)
{
    if (x > 0.0) {
        return 1;
    }
    // Γ alternates sign between consecutive poles; on (−1, 0) it is negative.
    return (static_cast<long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

void check_params(const WrightParams& params)
{
    if (!(params.A > 0.0)) {
        throw std::invalid_argument("Wright parameters: A must be positive");
    }
    if (params.alphas.empty()) {
        throw std::invalid_argument("Wright parameters: alphas must be nonempty");
    }
}

}  // namespace

double wright_cjr(double A, double B, int j, int r)
{
    if (!(A > 0.0) || j < 0 || r < 0) {
        throw std::invalid_argument("wright_cjr: need A > 0 and j, r >= 0");
    }
    const double x = j + B + 1.5;
    const double top = x + r;
    const double bottom = x - r;
    if (is_nonpositive_integer(bottom)) {
        // 1/Γ vanishes at its poles.
        if (is_nonpositive_integer(top)) {
            throw std::domain_error("wright_cjr: numerator Gamma at a pole");
        }
        return 0.0;
    }
    if (is_nonpositive_integer(top)) {
        throw std::domain_error("wright_cjr: numerator Gamma at a pole");
    }
    const double sqrtA = std::sqrt(A);
    const double log_ratio = std::lgamma(top) - std::lgamma(bottom) - std::lgamma(r + 1.0);
    const int sign = gamma_sign(top) * gamma_sign(bottom) * ((r % 2 == 0) ? 1 : -1);
    const double log_mag = -r * std::log(4.0 * sqrtA) + (j + B + 0.5) * std::log(sqrtA) -
                           std::log(2.0 * std::sqrt(std::numbers::pi)) + log_ratio;
    return sign * std::exp(log_mag);
}

WrightExpansion wright_expansion(const WrightParams& params, int depth)
{
    check_params(params);
    if (depth < 1 || depth > static_cast<int>(params.alphas.size())) {
        throw std::invalid_argument("wright_expansion: depth must lie in [1, alphas.size()]");
    }
    WrightExpansion out{params, {}};
    for (int r = 0; r < depth; ++r) {
        std::complex<double> pr = 0.0;
        for (int j = 0; j <= r; ++j) {
            pr += params.alphas[static_cast<std::size_t>(j)] * wright_cjr(params.A, params.B, j, r - j);
        }
        out.p.push_back(pr);
    }
    return out;
}

double wright_log_estimate(const WrightParams& params, long n, int N)
{
    if (n < 1) {
        throw std::invalid_argument("wright_estimate: n must be positive");
    }
    const auto ex = wright_expansion(params, N);
    const double nd = static_cast<double>(n);
    std::complex<double> sum = 0.0;
    for (int r = 0; r < N; ++r) {
        sum += ex.p[static_cast<std::size_t>(r)] * std::pow(nd, -0.5 * r);
    }
    const double s = sum.real();
    if (!(s > 0.0)) {
        throw std::domain_error("wright_log_estimate: truncated sum is not positive");
    }
    return 0.25 * (-2.0 * params.B - 3.0) * std::log(nd) + 2.0 * std::sqrt(params.A * nd) + std::log(s);
}

double wright_estimate(const WrightParams& params, long n, int N)
{
    if (n < 1) {
        throw std::invalid_argument("wright_estimate: n must be positive");
    }
    const auto ex = wright_expansion(params, N);
    const double nd = static_cast<double>(n);
    std::complex<double> sum = 0.0;
    for (int r = 0; r < N; ++r) {
        sum += ex.p[static_cast<std::size_t>(r)] * std::pow(nd, -0.5 * r);
    }
    return std::pow(nd, 0.25 * (-2.0 * params.B - 3.0)) * std::exp(2.0 * std::sqrt(params.A * nd)) * sum.real();
}

WrightParams partition_wright_params()
{
    const double pi = std::numbers::pi;
    return WrightParams{pi * pi / 6.0, 0.5, {1.0 / std::sqrt(2.0 * pi)}};
}

}  // namespace hooklens
