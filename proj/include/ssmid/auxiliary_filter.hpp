#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "ssmid/densities.hpp"
#include "ssmid/errors.hpp"
#include "ssmid/kalman.hpp"
#include "ssmid/model.hpp"
#include "ssmid/particle_system.hpp"
#include "ssmid/resampling.hpp"

namespace ssmid {

// Mixture weights are nu^j ∝ w^j exp(log_adjustment(x^j)); particles are then
// proposed from r(x_t | x_{t-1}, y_t). The first step proposes from r_1(x_1 | y_1).
template <class Params>
struct ProposalSpec {
    std::function<double(const Params&, double x_prev, double y, std::size_t t)> log_adjustment;
    std::function<double(const Params&, double x_prev, double y, std::size_t t, Rng&)> sample;
    std::function<double(const Params&, double x, double x_prev, double y, std::size_t t)> logpdf;
    std::function<double(const Params&, double y, Rng&)> sample_initial;
    std::function<double(const Params&, double x, double y)> initial_logpdf;
};

// log of  w * g * f / (nu * r). Throws DegeneracyError on a zero denominator.
inline double apf_log_weight(double log_w_prev, double log_nu_prev, double log_g, double log_f, double log_r,
                             std::size_t t = 0) {
    if (!(log_nu_prev > -INFINITY) || !(log_r > -INFINITY))
        throw DegeneracyError("apf_weight: zero mixture weight or proposal density", t);
    return log_w_prev + log_g + log_f - log_nu_prev - log_r;
}

template <StateSpaceModel M>
double apf_weight(const typename M::Params& params, const M& model, const ProposalSpec<typename M::Params>& proposal,
                  double w_prev, double nu_prev, double x_new, double x_old, double y_t, std::size_t t) {
    const double log_g = model.observation_logpdf(params, x_new, y_t, t);
    const double log_f = model.transition_logpdf(params, x_old, x_new, t - 1);
    const double log_r = proposal.logpdf(params, x_new, x_old, y_t, t);
    return std::exp(apf_log_weight(std::log(w_prev), std::log(nu_prev), log_g, log_f, log_r, t));
}

template <StateSpaceModel M>
ProposalSpec<typename M::Params> bootstrap_proposal(const M& model) {
    using P = typename M::Params;
    ProposalSpec<P> q;
    q.log_adjustment = [](const P&, double, double, std::size_t) { return 0.0; };
    q.sample = [model](const P& p, double x_prev, double, std::size_t t, Rng& rng) {
        return model.sample_transition(p, x_prev, t - 1, rng);
    };
    q.logpdf = [model](const P& p, double x, double x_prev, double, std::size_t t) {
        return model.transition_logpdf(p, x_prev, x, t - 1);
    };
    q.sample_initial = [model](const P& p, double, Rng& rng) { return model.sample_initial(p, rng); };
    q.initial_logpdf = [model](const P& p, double x, double) { return model.initial_logpdf(p, x); };
    return q;
}

// Exact one-step posterior p(x_t | x_{t-1}, y_t) with nu ∝ w p(y_t | x_{t-1}).
ProposalSpec<LgssParams> lgss_fully_adapted_proposal();

// Gaussian random-walk style proposal N(a x_{t-1}, inflation / theta) with uniform
// adjustment; deliberately mismatched so the two weightings differ.
ProposalSpec<LgssParams> lgss_inflated_proposal(double inflation);

enum class ApfWeighting {
    auxiliary,  // w^{a} g f / (nu^{a} r), O(N) per step
    marginal,   // g sum_j w^j f / sum_j nu^j r, O(N^2) per step; test oracle only
};

template <StateSpaceModel M>
ParticleSystem auxiliary_pf(const M& model, const typename M::Params& params, std::span<const double> y, std::size_t N,
                            const ProposalSpec<typename M::Params>& q, ApfWeighting weighting, Rng& rng,
                            ResamplingScheme scheme = ResamplingScheme::multinomial) {
    if (N == 0) throw DomainError("auxiliary_pf: N must be at least 1");
    if (y.empty()) throw DomainError("auxiliary_pf: empty observation sequence");
    model.validate(params);
    const std::size_t T = y.size();
    const double logN = std::log(static_cast<double>(N));
    ParticleSystem ps;
    ps.num_particles = N;
    ps.particles.assign(T, std::vector<double>(N));
    ps.log_weights.assign(T, std::vector<double>(N));
    ps.weights.assign(T, std::vector<double>(N));
    ps.ancestors.assign(T, {});
    ps.loglik_increments.assign(T, 0.0);

    Resampler resampler(scheme);
    std::vector<double> log_nu(N), nu(N), logw_prev(N), terms_f(N), terms_r(N);
    for (std::size_t t = 0; t < T; ++t) {
        auto& x = ps.particles[t];
        auto& lw = ps.log_weights[t];
        if (t == 0) {
            for (std::size_t i = 0; i < N; ++i) {
                x[i] = q.sample_initial(params, y[0], rng);
                const double lr = q.initial_logpdf(params, x[i], y[0]);
                if (!(lr > -INFINITY)) throw DegeneracyError("auxiliary_pf: zero initial proposal density", 0);
                lw[i] = model.observation_logpdf(params, x[i], y[0], 0) + model.initial_logpdf(params, x[i]) - lr;
            }
        } else {
            const auto& xp = ps.particles[t - 1];
            const auto& wp = ps.weights[t - 1];
            for (std::size_t j = 0; j < N; ++j) {
                logw_prev[j] = std::log(wp[j]);
                log_nu[j] = logw_prev[j] + q.log_adjustment(params, xp[j], y[t], t);
            }
            if (!(normalise_log_weights(log_nu, nu) > -INFINITY))
                throw DegeneracyError("auxiliary_pf: all mixture weights are zero", t);
            for (std::size_t j = 0; j < N; ++j) log_nu[j] = std::log(nu[j]);
            auto& anc = ps.ancestors[t];
            anc.resize(N);
            resampler(nu, rng, anc);
            for (std::size_t i = 0; i < N; ++i) {
                const std::size_t a = anc[i];
                x[i] = q.sample(params, xp[a], y[t], t, rng);
                const double lg = model.observation_logpdf(params, x[i], y[t], t);
                if (weighting == ApfWeighting::auxiliary) {
                    lw[i] = apf_log_weight(logw_prev[a], log_nu[a], lg, model.transition_logpdf(params, xp[a], x[i], t - 1),
                                           q.logpdf(params, x[i], xp[a], y[t], t), t);
                } else {
                    for (std::size_t j = 0; j < N; ++j) {
                        terms_f[j] = logw_prev[j] + model.transition_logpdf(params, xp[j], x[i], t - 1);
                        terms_r[j] = log_nu[j] + q.logpdf(params, x[i], xp[j], y[t], t);
                    }
                    const double denom = log_sum_exp(terms_r);
                    if (!(denom > -INFINITY)) throw DegeneracyError("auxiliary_pf: zero marginal proposal density", t);
                    lw[i] = lg + log_sum_exp(terms_f) - denom;
                }
            }
        }
        const double lse = normalise_log_weights(lw, ps.weights[t]);
        if (!(lse > -INFINITY) || std::isnan(lse)) throw DegeneracyError("auxiliary_pf: all particle weights are zero", t);
        ps.loglik_increments[t] = lse - logN;
    }
    return ps;
}

}  // namespace ssmid
