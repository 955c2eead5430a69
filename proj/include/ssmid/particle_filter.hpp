#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "ssmid/errors.hpp"
#include "ssmid/model.hpp"
#include "ssmid/particle_system.hpp"
#include "ssmid/random.hpp"
#include "ssmid/resampling.hpp"

namespace ssmid {

struct PfOptions {
    ResamplingScheme scheme = ResamplingScheme::multinomial;
    // Resample every step unless `adaptive` is set, in which case resampling
    // happens only when ESS < ess_fraction * N.
    bool adaptive = false;
    double ess_fraction = 0.5;
};

namespace detail {

// Shared implementation of the bootstrap filter. When `record` is null only the
// current generation is kept, which is what the pseudo-marginal samplers need.
template <StateSpaceModel M>
double run_bootstrap(const M& model, const typename M::Params& params, std::span<const double> y, std::size_t N,
                     const PfOptions& opts, Rng& rng, ParticleSystem* record) {
    if (N == 0) throw DomainError("bootstrap_pf: N must be at least 1");
    if (y.empty()) throw DomainError("bootstrap_pf: empty observation sequence");
    model.validate(params);
    const std::size_t T = y.size();
    const double logN = std::log(static_cast<double>(N));

    std::vector<double> x(N), x_prev(N), logw(N), w(N), w_prev(N);
    std::vector<std::size_t> anc(N);
    Resampler resampler(opts.scheme);
    if (record) {
        record->num_particles = N;
        record->particles.assign(T, {});
        record->log_weights.assign(T, {});
        record->weights.assign(T, {});
        record->ancestors.assign(T, {});
        record->loglik_increments.assign(T, 0.0);
    }

    double loglik = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        if (t == 0) {
            for (std::size_t i = 0; i < N; ++i) {
                x[i] = model.sample_initial(params, rng);
                logw[i] = model.observation_logpdf(params, x[i], y[t], t);
            }
        } else {
            bool do_resample = true;
            if (opts.adaptive) {
                double s2 = 0.0;
                for (double v : w_prev) s2 += v * v;
                do_resample = 1.0 / s2 < opts.ess_fraction * static_cast<double>(N);
            }
            if (do_resample) {
                resampler(w_prev, rng, anc);
            } else {
                std::iota(anc.begin(), anc.end(), std::size_t{0});
            }
            for (std::size_t i = 0; i < N; ++i) {
                x[i] = model.sample_transition(params, x_prev[anc[i]], t - 1, rng);
                logw[i] = model.observation_logpdf(params, x[i], y[t], t);
                // keeps N^{-1} sum w̄ equal to the one-step predictive estimate
                if (!do_resample) logw[i] += std::log(static_cast<double>(N) * w_prev[i]);
            }
        }
        const double lse = normalise_log_weights(logw, w);
        if (!(lse > -INFINITY) || std::isnan(lse)) throw DegeneracyError("bootstrap_pf: all particle weights are zero", t);
        const double inc = lse - logN;
        loglik += inc;
        if (record) {
            record->particles[t] = x;
            record->log_weights[t] = logw;
            record->weights[t] = w;
            if (t > 0) record->ancestors[t] = anc;
            record->loglik_increments[t] = inc;
        }
        std::swap(x, x_prev);
        std::swap(w, w_prev);
    }
    return loglik;
}

}  // namespace detail

template <StateSpaceModel M>
ParticleSystem bootstrap_pf(const M& model, const typename M::Params& params, std::span<const double> y, std::size_t N,
                            const PfOptions& opts, Rng& rng) {
    ParticleSystem ps;
    detail::run_bootstrap(model, params, y, N, opts, rng, &ps);
    return ps;
}

template <StateSpaceModel M>
ParticleSystem bootstrap_pf(const M& model, const typename M::Params& params, std::span<const double> y, std::size_t N,
                            ResamplingScheme scheme, Rng& rng) {
    PfOptions opts;
    opts.scheme = scheme;
    return bootstrap_pf(model, params, y, N, opts, rng);
}

// Likelihood estimate only; consumes exactly the same random numbers as bootstrap_pf.
template <StateSpaceModel M>
double bootstrap_loglik(const M& model, const typename M::Params& params, std::span<const double> y, std::size_t N,
                        const PfOptions& opts, Rng& rng) {
    return detail::run_bootstrap(model, params, y, N, opts, rng, nullptr);
}

}  // namespace ssmid
