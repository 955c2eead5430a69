#pragma once

#include <span>

namespace ssmid {

inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112;

// Gamma log-density, shape a and RATE b (mean a/b).
double gamma_logpdf(double x, double a, double b);

double normal_logpdf(double x, double mean, double variance);

double log_sum_exp(std::span<const double> values);

}  // namespace ssmid
