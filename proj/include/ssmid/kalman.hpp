#pragma once

#include <span>
#include <vector>

#include "ssmid/lgss.hpp"
#include "ssmid/random.hpp"

namespace ssmid {

// Index t holds the quantities for observation t (0-based): predicted_* are
// x_{t|t-1} moments, gain is the predictor gain a c P_{t|t-1} / Lambda_t.
struct KalmanRun {
    LgssParams params;
    std::vector<double> predicted_mean;
    std::vector<double> predicted_var;
    std::vector<double> innovation_var;
    std::vector<double> gain;
    std::vector<double> filtered_mean;
    std::vector<double> filtered_var;
    double loglik = 0.0;

    std::size_t size() const noexcept { return predicted_mean.size(); }
};

struct SensitivityRun {
    std::vector<double> d_predicted_mean;
    std::vector<double> d_predicted_var;
    std::vector<double> d_gain;
    double gradient = 0.0;
};

// cross_cov[t] = Cov(x_t, x_{t-1} | y_{1:T}); cross_cov[0] is zero.
struct SmootherRun {
    std::vector<double> mean;
    std::vector<double> var;
    std::vector<double> cross_cov;

    std::size_t size() const noexcept { return mean.size(); }
};

KalmanRun kalman_filter(const LgssParams& params, std::span<const double> y);

SensitivityRun kalman_sensitivity(const LgssParams& params, std::span<const double> y);
double kalman_gradient(const LgssParams& params, std::span<const double> y);

SmootherRun rts_smoother(const KalmanRun& filter);
SmootherRun rts_smoother(const LgssParams& params, std::span<const double> y);

// One exact draw from p(x_{1:T} | y_{1:T}) by backward simulation.
std::vector<double> backward_sample(const LgssParams& params, const KalmanRun& filter, Rng& rng);

}  // namespace ssmid
