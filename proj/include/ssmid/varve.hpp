#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ssmid/densities.hpp"
#include "ssmid/model.hpp"

namespace ssmid {

// x_{t+1} ~ N(phi x_t, 1/tau);  y_t ~ Gamma(shape 6.25, rate 0.256 exp(-x_t)).
struct VarveParams {
    double phi = 0.95;
    double tau = 50.0;
    static constexpr double obs_shape = 6.25;
    static constexpr double obs_rate_scale = 0.256;
};

void validate(const VarveParams& p);
StationaryMoments stationary_initial(const VarveParams& p);

class VarveModel {
public:
    using Params = VarveParams;
    static constexpr std::size_t param_dim = 2;

    explicit VarveModel(double prior_shape = 0.01, double prior_rate = 0.01);

    double prior_shape() const noexcept { return prior_shape_; }
    double prior_rate() const noexcept { return prior_rate_; }

    double sample_initial(const Params& p, Rng& rng) const {
        return normal_draw(rng, 0.0, std::sqrt(initial_variance(p)));
    }
    double initial_logpdf(const Params& p, double x) const { return normal_logpdf(x, 0.0, initial_variance(p)); }

    double sample_transition(const Params& p, double x, std::size_t, Rng& rng) const {
        return normal_draw(rng, p.phi * x, 1.0 / std::sqrt(p.tau));
    }
    double transition_logpdf(const Params& p, double from, double to, std::size_t) const {
        const double d = to - p.phi * from;
        return 0.5 * (std::log(p.tau) - kLogTwoPi) - 0.5 * p.tau * d * d;
    }
    double transition_log_bound(const Params& p) const { return 0.5 * (std::log(p.tau) - kLogTwoPi); }

    double observation_logpdf(const Params&, double x, double y, std::size_t) const {
        if (!(y > 0.0)) return -INFINITY;
        // log of rate 0.256 e^{-x} is log(0.256) - x
        const double log_rate = kLogRateScale - x;
        return Params::obs_shape * log_rate + (Params::obs_shape - 1.0) * std::log(y) -
               std::exp(log_rate) * y - kLogGammaShape;
    }
    double sample_observation(const Params&, double x, std::size_t, Rng& rng) const {
        return gamma_draw(rng, Params::obs_shape, Params::obs_rate_scale * std::exp(-x));
    }

    double log_prior(const Params& p) const;
    void validate(const Params& p) const { ssmid::validate(p); }
    bool in_support(const Params& p) const {
        return std::abs(p.phi) < 1.0 && p.tau > 0.0 && std::isfinite(p.tau);
    }

    std::vector<double> to_vector(const Params& p) const { return {p.phi, p.tau}; }
    Params from_vector(std::span<const double> v, const Params& base) const;
    std::vector<std::string> parameter_names() const { return {"phi", "tau"}; }

private:
    static double initial_variance(const Params& p) { return 1.0 / ((1.0 - p.phi * p.phi) * p.tau); }

    static const double kLogRateScale;
    static const double kLogGammaShape;

    double prior_shape_;
    double prior_rate_;
};

enum class VarveCoordinates { transformed, raw };

// Theta-dependent part of log p(x_{1:T}, y_{1:T}), additive constants dropped:
// 0.5 { log((1-phi^2) tau) - (1-phi^2) tau x_1^2 + sum_t [log tau - tau (x_{t+1} - phi x_t)^2] }
double varve_complete_loglik(const VarveParams& p, std::span<const double> x);

// Gradient of the above. Transformed coordinates are (atanh(phi), log(tau)).
std::array<double, 2> varve_score(const VarveParams& p, std::span<const double> x,
                                  VarveCoordinates coords = VarveCoordinates::transformed);

std::array<double, 2> varve_to_transformed(const VarveParams& p);
VarveParams varve_from_transformed(double phi_t, double tau_t);

}  // namespace ssmid
