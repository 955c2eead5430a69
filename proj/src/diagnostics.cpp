#include "ssmid/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssmid/errors.hpp"

namespace ssmid {

double weight_ess(std::span<const double> weights) {
    double s = 0.0;
    for (double w : weights) s += w * w;
    if (!(s > 0.0)) throw DomainError("weight_ess: weights are all zero");
    return 1.0 / s;
}

double sample_mean(std::span<const double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

double sample_variance(std::span<const double> v) {
    if (v.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    const double m = sample_mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double quantile(std::vector<double> v, double p) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

double chain_iact(std::span<const double> values, std::size_t max_lag) {
    const std::size_t n = values.size();
    if (n < 2) return std::numeric_limits<double>::infinity();
    const double m = sample_mean(values);
    double c0 = 0.0;
    for (double x : values) c0 += (x - m) * (x - m);
    c0 /= static_cast<double>(n);
    if (!(c0 > 0.0)) return std::numeric_limits<double>::infinity();
    if (max_lag == 0) max_lag = std::max<std::size_t>(1, n / 10);
    max_lag = std::min(max_lag, n - 1);
    double tau = 1.0;
    for (std::size_t k = 1; k <= max_lag; ++k) {
        double ck = 0.0;
        for (std::size_t i = 0; i + k < n; ++i) ck += (values[i] - m) * (values[i + k] - m);
        const double rho = ck / static_cast<double>(n) / c0;
        if (rho < 0.0) break;
        tau += 2.0 * rho;
    }
    return tau;
}

double mc_standard_error(std::span<const double> values, std::size_t max_lag) {
    const double iact = chain_iact(values, max_lag);
    if (!std::isfinite(iact)) return std::numeric_limits<double>::infinity();
    return std::sqrt(sample_variance(values) * iact / static_cast<double>(values.size()));
}

std::size_t freedman_diaconis_bins(std::span<const double> values, std::size_t max_bins) {
    if (values.size() < 2) return 1;
    std::vector<double> v(values.begin(), values.end());
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    const double range = *hi - *lo;
    const double iqr = quantile(v, 0.75) - quantile(v, 0.25);
    if (!(range > 0.0) || !(iqr > 0.0)) return 1;
    const double width = 2.0 * iqr * std::cbrt(1.0 / static_cast<double>(v.size()));
    const double bins = std::ceil(range / width);
    return std::clamp<std::size_t>(static_cast<std::size_t>(bins), 1, max_bins);
}

Histogram make_histogram(std::span<const double> values, std::size_t bins) {
    Histogram h;
    if (bins == 0) bins = freedman_diaconis_bins(values);
    double lo = 0.0, hi = 1.0;
    if (!values.empty()) {
        const auto [a, b] = std::minmax_element(values.begin(), values.end());
        lo = *a;
        hi = *b;
    }
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    h.edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i)
        h.edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double x : values) {
        auto idx = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
        if (idx >= bins) idx = bins - 1;
        ++h.counts[idx];
    }
    return h;
}

}  // namespace ssmid
