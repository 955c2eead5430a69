#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "ssmid/densities.hpp"
#include "ssmid/model.hpp"

namespace ssmid {

// x_{t+1} = a x_t + v_t, v_t ~ N(0, 1/theta);  y_t = c x_t + e_t, e_t ~ N(0, r).
struct LgssParams {
    double theta = 1.0;
    double a = 0.7;
    double c = 0.5;
    double r = 0.1;
};

void validate(const LgssParams& p);
StationaryMoments stationary_initial(const LgssParams& p);

class LgssModel {
public:
    using Params = LgssParams;
    static constexpr std::size_t param_dim = 1;

    explicit LgssModel(double prior_shape = 0.01, double prior_rate = 0.01);

    double prior_shape() const noexcept { return prior_shape_; }
    double prior_rate() const noexcept { return prior_rate_; }

    double sample_initial(const Params& p, Rng& rng) const {
        return normal_draw(rng, 0.0, std::sqrt(initial_variance(p)));
    }
    double initial_logpdf(const Params& p, double x) const { return normal_logpdf(x, 0.0, initial_variance(p)); }

    double sample_transition(const Params& p, double x, std::size_t, Rng& rng) const {
        return normal_draw(rng, p.a * x, 1.0 / std::sqrt(p.theta));
    }
    double transition_logpdf(const Params& p, double from, double to, std::size_t) const {
        const double d = to - p.a * from;
        return 0.5 * (std::log(p.theta) - kLogTwoPi) - 0.5 * p.theta * d * d;
    }
    double transition_log_bound(const Params& p) const { return 0.5 * (std::log(p.theta) - kLogTwoPi); }

    double observation_logpdf(const Params& p, double x, double y, std::size_t) const {
        return normal_logpdf(y, p.c * x, p.r);
    }
    double sample_observation(const Params& p, double x, std::size_t, Rng& rng) const {
        return normal_draw(rng, p.c * x, std::sqrt(p.r));
    }

    double log_prior(const Params& p) const;
    void validate(const Params& p) const { ssmid::validate(p); }
    bool in_support(const Params& p) const { return p.theta > 0.0 && std::isfinite(p.theta); }

    std::vector<double> to_vector(const Params& p) const { return {p.theta}; }
    Params from_vector(std::span<const double> v, const Params& base) const;
    std::vector<std::string> parameter_names() const { return {"theta"}; }

private:
    static double initial_variance(const Params& p) { return 1.0 / ((1.0 - p.a * p.a) * p.theta); }

    double prior_shape_;
    double prior_rate_;
};

// d/dtheta of log p(x_{1:T}, y_{1:T}) for a single trajectory.
double lgss_score(const LgssParams& p, std::span<const double> x);

// (1-a^2) x_1^2 + sum_t (x_{t+1} - a x_t)^2
double lgss_state_sum_of_squares(double a, std::span<const double> x);

}  // namespace ssmid
