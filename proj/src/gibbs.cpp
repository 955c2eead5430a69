#include "ssmid/gibbs.hpp"

#include "ssmid/densities.hpp"

namespace ssmid {

GammaConditional lgss_theta_conditional(const LgssModel& model, const LgssParams& params, std::span<const double> x) {
    return {model.prior_shape() + 0.5 * static_cast<double>(x.size()),
            model.prior_rate() + 0.5 * lgss_state_sum_of_squares(params.a, x)};
}

GibbsResult gibbs_lgss(const LgssModel& model, const LgssParams& base, std::span<const double> y, double theta0,
                       std::size_t M, Rng& rng, const GibbsOptions& opts) {
    LgssParams p = base;
    p.theta = theta0;
    validate(p);
    GibbsResult res;
    res.chain.names = {"theta"};
    res.chain.burn_in = opts.burn_in;
    auto filter = kalman_filter(p, y);
    res.chain.push({p.theta}, filter.loglik, true, {p.theta});
    for (std::size_t m = 1; m <= M; ++m) {
        const auto x = backward_sample(p, filter, rng);
        if (opts.update_theta) {
            const auto g = lgss_theta_conditional(model, p, x);
            p.theta = gamma_draw(rng, g.shape, g.rate);
            filter = kalman_filter(p, y);
        }
        res.chain.push({p.theta}, filter.loglik, true, {p.theta});
        if (opts.store_trajectories) res.trajectories.push_back(x);
    }
    return res;
}

VarveConditionalConstants varve_conditional_constants(std::span<const double> x, double a, double b) {
    const std::size_t T = x.size();
    if (T < 3) throw DomainError("sample_varve_conditional: need T >= 3");
    double sum_sq = 0.0, cross = 0.0, interior = 0.0;
    for (std::size_t t = 0; t < T; ++t) sum_sq += x[t] * x[t];
    for (std::size_t t = 0; t + 1 < T; ++t) cross += x[t + 1] * x[t];
    for (std::size_t t = 1; t + 1 < T; ++t) interior += x[t] * x[t];
    if (!(interior > 0.0)) throw DomainError("sample_varve_conditional: interior states are all zero");
    VarveConditionalConstants c;
    c.shape = a + 0.5 * static_cast<double>(T - 1);
    c.rate = b + 0.5 * sum_sq - 0.5 * cross * cross / interior;
    c.mean = cross / interior;
    c.precision = interior;
    return c;
}

double varve_conditional_log_target(double phi, double tau, std::span<const double> x, double a, double b) {
    if (!(std::abs(phi) < 1.0) || !(tau > 0.0)) return -INFINITY;
    const auto c = varve_conditional_constants(x, a, b);
    const double T = static_cast<double>(x.size());
    const double d = phi - c.mean;
    return (a + 0.5 * T - 1.0) * std::log(tau) - c.rate * tau + 0.5 * std::log(1.0 - phi * phi) -
           0.5 * tau * c.precision * d * d;
}

VarveConditionalDraw sample_varve_conditional(std::span<const double> x, double a, double b, Rng& rng,
                                              std::size_t max_attempts) {
    const auto c = varve_conditional_constants(x, a, b);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> z;
    VarveConditionalDraw out;
    for (std::size_t k = 1; k <= max_attempts; ++k) {
        const double tau = gamma_draw(rng, c.shape, c.rate);
        const double phi = c.mean + z(rng) / std::sqrt(tau * c.precision);
        const double u = unif(rng);
        if (std::abs(phi) < 1.0 && u < std::sqrt(1.0 - phi * phi)) {
            out.params.phi = phi;
            out.params.tau = tau;
            out.attempts = k;
            return out;
        }
    }
    throw NumericalError("sample_varve_conditional: rejection sampler exceeded its attempt budget");
}

LgssParams sample_parameter_conditional(const LgssModel& model, const LgssParams& current, std::span<const double> x,
                                        Rng& rng) {
    const auto g = lgss_theta_conditional(model, current, x);
    LgssParams p = current;
    p.theta = gamma_draw(rng, g.shape, g.rate);
    return p;
}

VarveParams sample_parameter_conditional(const VarveModel& model, const VarveParams& current,
                                         std::span<const double> x, Rng& rng) {
    if (x.empty()) {
        VarveParams p = current;
        p.phi = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        p.tau = gamma_draw(rng, model.prior_shape(), model.prior_rate());
        return p;
    }
    return sample_varve_conditional(x, model.prior_shape(), model.prior_rate(), rng).params;
}

}  // namespace ssmid
