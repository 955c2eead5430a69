#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ssmid {

// 1 / sum_i w_i^2 for normalised weights.
double weight_ess(std::span<const double> weights);

double sample_mean(std::span<const double> v);
double sample_variance(std::span<const double> v);  // n - 1 denominator
double quantile(std::vector<double> v, double p);   // linear interpolation between order statistics

// 1 + 2 sum_k rho_k, summed up to (excluding) the first negative autocorrelation
// or max_lag. max_lag = 0 picks n / 10. A constant chain returns +infinity.
double chain_iact(std::span<const double> values, std::size_t max_lag = 0);

// sd * sqrt(IACT / n)
double mc_standard_error(std::span<const double> values, std::size_t max_lag = 0);

struct Histogram {
    std::vector<double> edges;  // bins + 1 edges
    std::vector<std::size_t> counts;
};

std::size_t freedman_diaconis_bins(std::span<const double> values, std::size_t max_bins = 1000);
Histogram make_histogram(std::span<const double> values, std::size_t bins = 0);

}  // namespace ssmid
