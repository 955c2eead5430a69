#include "ssmid/densities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssmid/errors.hpp"

namespace ssmid {

double gamma_logpdf(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("gamma_logpdf: shape and rate must be positive and finite");
    if (std::isnan(x)) throw DomainError("gamma_logpdf: x is NaN");
    if (x <= 0.0 || std::isinf(x)) return -std::numeric_limits<double>::infinity();
    return a * std::log(b) + (a - 1.0) * std::log(x) - b * x - std::lgamma(a);
}

double normal_logpdf(double x, double mean, double variance) {
    if (!(variance > 0.0)) throw DomainError("normal_logpdf: variance must be positive");
    const double d = x - mean;
    return -0.5 * (kLogTwoPi + std::log(variance) + d * d / variance);
}

double log_sum_exp(std::span<const double> values) {
    if (values.empty()) return -std::numeric_limits<double>::infinity();
    const double m = *std::max_element(values.begin(), values.end());
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double v : values) s += std::exp(v - m);
    return m + std::log(s);
}

}  // namespace ssmid
