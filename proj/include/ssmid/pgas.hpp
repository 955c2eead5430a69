#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "ssmid/errors.hpp"
#include "ssmid/model.hpp"
#include "ssmid/particle_system.hpp"
#include "ssmid/resampling.hpp"

namespace ssmid {

struct PgasOutput {
    std::vector<double> trajectory;
    ParticleSystem system;  // final weights live in system.weights.back()
    std::size_t chosen = 0;
};

// Conditional particle filter with ancestor sampling. The last particle (index
// N-1) is pinned to the reference trajectory.
template <StateSpaceModel M>
PgasOutput pgas_kernel(const M& model, const typename M::Params& params, std::span<const double> y, std::size_t N,
                       std::span<const double> reference, Rng& rng) {
    const std::size_t T = y.size();
    if (T == 0) throw DomainError("pgas_kernel: empty observation sequence");
    if (N < 2) throw DomainError("pgas_kernel: N must be at least 2");
    if (reference.size() != T) throw DomainError("pgas_kernel: reference trajectory has the wrong length");
    model.validate(params);

    PgasOutput out;
    ParticleSystem& ps = out.system;
    ps.num_particles = N;
    ps.particles.assign(T, std::vector<double>(N));
    ps.log_weights.assign(T, std::vector<double>(N));
    ps.weights.assign(T, std::vector<double>(N));
    ps.ancestors.assign(T, {});
    ps.loglik_increments.assign(T, 0.0);

    const std::size_t pin = N - 1;
    const double logN = std::log(static_cast<double>(N));
    Resampler resampler(ResamplingScheme::multinomial);
    std::vector<double> las(N), was(N);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t t = 0; t < T; ++t) {
        auto& x = ps.particles[t];
        if (t == 0) {
            for (std::size_t i = 0; i < pin; ++i) x[i] = model.sample_initial(params, rng);
        } else {
            const auto& xp = ps.particles[t - 1];
            const auto& wp = ps.weights[t - 1];
            auto& anc = ps.ancestors[t];
            anc.resize(N);
            resampler(wp, rng, std::span<std::size_t>(anc.data(), pin));
            for (std::size_t i = 0; i < pin; ++i) x[i] = model.sample_transition(params, xp[anc[i]], t - 1, rng);
            for (std::size_t j = 0; j < N; ++j)
                las[j] = std::log(wp[j]) + model.transition_logpdf(params, xp[j], reference[t], t - 1);
            if (!(normalise_log_weights(las, was) > -INFINITY))
                throw DegeneracyError("pgas_kernel: zero ancestor-sampling weight", t);
            anc[pin] = sample_index(was, unif(rng));
        }
        x[pin] = reference[t];
        auto& lw = ps.log_weights[t];
        for (std::size_t i = 0; i < N; ++i) lw[i] = model.observation_logpdf(params, x[i], y[t], t);
        const double lse = normalise_log_weights(lw, ps.weights[t]);
        if (!(lse > -INFINITY) || std::isnan(lse)) throw DegeneracyError("pgas_kernel: all particle weights are zero", t);
        ps.loglik_increments[t] = lse - logN;
    }
    out.chosen = sample_index(ps.weights[T - 1], unif(rng));
    out.trajectory = trace_lineage(ps, out.chosen);
    return out;
}

}  // namespace ssmid
