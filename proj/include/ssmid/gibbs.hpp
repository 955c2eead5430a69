#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ssmid/chain.hpp"
#include "ssmid/kalman.hpp"
#include "ssmid/lgss.hpp"
#include "ssmid/model.hpp"
#include "ssmid/particle_filter.hpp"
#include "ssmid/pgas.hpp"
#include "ssmid/varve.hpp"

namespace ssmid {

struct GibbsOptions {
    std::size_t burn_in = 0;
    bool store_trajectories = false;
    bool update_theta = true;  // false keeps theta fixed (conditional-correctness checks)
};

struct GibbsResult {
    ParameterChain chain;
    std::vector<std::vector<double>> trajectories;  // x[m] for m = 1..M when stored
};

// Gam(a0 + T/2, b0 + 0.5 ((1-a^2) x_1^2 + sum (x_{t+1} - a x_t)^2)), shape-rate.
struct GammaConditional {
    double shape;
    double rate;
};
GammaConditional lgss_theta_conditional(const LgssModel& model, const LgssParams& params, std::span<const double> x);

// Gibbs sampler alternating Kalman backward simulation and the Gamma conditional.
// loglik[m] is the exact Kalman log-likelihood at theta[m].
GibbsResult gibbs_lgss(const LgssModel& model, const LgssParams& base, std::span<const double> y, double theta0,
                       std::size_t M, Rng& rng, const GibbsOptions& opts = {});

struct VarveConditionalConstants {
    double shape;      // a + (T-1)/2
    double rate;       // b + 0.5 sum x_t^2 - 0.5 (sum x_{t+1} x_t)^2 / D
    double mean;       // sum x_{t+1} x_t / D
    double precision;  // D = sum_{t=2}^{T-1} x_t^2 ; phi | tau ~ N(mean, 1/(tau D))
};

VarveConditionalConstants varve_conditional_constants(std::span<const double> x, double a, double b);

// Unnormalised log p(phi, tau | x) under phi ~ U(-1, 1), tau ~ Gam(a, b).
double varve_conditional_log_target(double phi, double tau, std::span<const double> x, double a, double b);

struct VarveConditionalDraw {
    VarveParams params;
    std::size_t attempts = 0;
};

// Exact draw by rejection: propose tau ~ Gam(shape, rate), phi ~ N(mean, 1/(tau D)),
// accept with probability 1{|phi| < 1} sqrt(1 - phi^2).
VarveConditionalDraw sample_varve_conditional(std::span<const double> x, double a, double b, Rng& rng,
                                              std::size_t max_attempts = 1000000);

LgssParams sample_parameter_conditional(const LgssModel& model, const LgssParams& current, std::span<const double> x,
                                        Rng& rng);
VarveParams sample_parameter_conditional(const VarveModel& model, const VarveParams& current,
                                         std::span<const double> x, Rng& rng);

// Particle Gibbs with ancestor sampling. loglik[m] is log p(x[m], y | theta[m]).
// An empty x0 starts from a bootstrap-PF draw at params0.
template <ParameterisedModel M>
GibbsResult pgas_gibbs(const M& model, const typename M::Params& params0, std::span<const double> y,
                       std::vector<double> x0, std::size_t N, std::size_t iterations, Rng& rng,
                       const GibbsOptions& opts = {}) {
    if (N < 2) throw DomainError("pgas_gibbs: N must be at least 2");
    model.validate(params0);
    GibbsResult res;
    res.chain.names = model.parameter_names();
    res.chain.burn_in = opts.burn_in;
    auto params = params0;
    if (y.empty()) {
        // no states to sample: the parameter conditional is the prior
        res.chain.push(model.to_vector(params), 0.0, true, model.to_vector(params));
        for (std::size_t m = 1; m <= iterations; ++m) {
            if (opts.update_theta) params = sample_parameter_conditional(model, params, {}, rng);
            res.chain.push(model.to_vector(params), 0.0, true, model.to_vector(params));
        }
        return res;
    }
    if (x0.empty()) {
        const auto ps = bootstrap_pf(model, params, y, N, PfOptions{}, rng);
        x0 = trace_lineage(ps, sample_index(ps.weights.back(), uniform01(rng)));
    }
    std::vector<double> x = std::move(x0);
    res.chain.push(model.to_vector(params), log_joint(model, params, x, y), true, model.to_vector(params));
    for (std::size_t m = 1; m <= iterations; ++m) {
        x = pgas_kernel(model, params, y, N, x, rng).trajectory;
        if (opts.update_theta) params = sample_parameter_conditional(model, params, x, rng);
        res.chain.push(model.to_vector(params), log_joint(model, params, x, y), true, model.to_vector(params));
        if (opts.store_trajectories) res.trajectories.push_back(x);
    }
    return res;
}

}  // namespace ssmid
