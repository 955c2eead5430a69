#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "ssmid/errors.hpp"
#include "ssmid/model.hpp"
#include "ssmid/particle_system.hpp"

namespace ssmid {

enum class FfbsiMode { exhaustive, rejection };

struct FfbsiOptions {
    FfbsiMode mode = FfbsiMode::exhaustive;
    // Rejection attempts per backward step before falling back to exhaustive evaluation.
    std::size_t max_attempts = 50;
};

struct FfbsiResult {
    std::vector<std::vector<double>> trajectories;
    std::size_t fallbacks = 0;
};

namespace detail {

inline std::size_t sample_cdf(const std::vector<double>& cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
    return it == cdf.end() ? cdf.size() - 1 : static_cast<std::size_t>(it - cdf.begin());
}

}  // namespace detail

template <StateSpaceModel M>
FfbsiResult ffbsi(const M& model, const typename M::Params& params, const ParticleSystem& ps, std::size_t num_traj,
                  const FfbsiOptions& opts, Rng& rng) {
    const std::size_t T = ps.length();
    const std::size_t N = ps.num_particles;
    if (T == 0) throw DomainError("ffbsi: empty forward run");
    if (num_traj == 0) throw DomainError("ffbsi: M must be at least 1");
    double log_bound = INFINITY;
    if (opts.mode == FfbsiMode::rejection) {
        if constexpr (BoundedTransition<M>) {
            log_bound = model.transition_log_bound(params);
        }
        if (!std::isfinite(log_bound)) throw ConfigError("ffbsi: rejection mode needs a finite transition-density bound");
    }

    // cumulative filter weights per time step, for drawing candidates
    std::vector<std::vector<double>> cdf(T, std::vector<double>(N));
    for (std::size_t t = 0; t < T; ++t) {
        double acc = 0.0;
        for (std::size_t j = 0; j < N; ++j) cdf[t][j] = (acc += ps.weights[t][j]);
    }

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    FfbsiResult res;
    res.trajectories.assign(num_traj, std::vector<double>(T));
    std::vector<double> lp(N), cw(N);
    for (std::size_t m = 0; m < num_traj; ++m) {
        auto& traj = res.trajectories[m];
        traj[T - 1] = ps.particles[T - 1][detail::sample_cdf(cdf[T - 1], unif(rng))];
        for (std::size_t t = T - 1; t-- > 0;) {
            const double xn = traj[t + 1];
            const auto& xs = ps.particles[t];
            bool done = false;
            if (opts.mode == FfbsiMode::rejection) {
                for (std::size_t k = 0; k < opts.max_attempts; ++k) {
                    const std::size_t j = detail::sample_cdf(cdf[t], unif(rng));
                    const double lf = model.transition_logpdf(params, xs[j], xn, t);
                    if (std::log(unif(rng)) < lf - log_bound) {
                        traj[t] = xs[j];
                        done = true;
                        break;
                    }
                }
                if (!done) ++res.fallbacks;
            }
            if (!done) {
                double mx = -INFINITY;
                for (std::size_t j = 0; j < N; ++j) {
                    lp[j] = std::log(ps.weights[t][j]) + model.transition_logpdf(params, xs[j], xn, t);
                    mx = std::max(mx, lp[j]);
                }
                if (!(mx > -INFINITY)) throw DegeneracyError("ffbsi: zero backward weights", t);
                double acc = 0.0;
                for (std::size_t j = 0; j < N; ++j) cw[j] = (acc += std::exp(lp[j] - mx));
                traj[t] = xs[detail::sample_cdf(cw, unif(rng))];
            }
        }
    }
    return res;
}

}  // namespace ssmid
