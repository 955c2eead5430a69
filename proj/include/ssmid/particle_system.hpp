#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ssmid {

// Full record of a particle filter run. Row t holds time step t (0-based).
// log_weights are the unnormalised log-weights log w̄_t^i; ancestors[0] is empty.
struct ParticleSystem {
    std::size_t num_particles = 0;
    std::vector<std::vector<double>> particles;
    std::vector<std::vector<double>> log_weights;
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<std::size_t>> ancestors;
    std::vector<double> loglik_increments;

    std::size_t length() const noexcept { return particles.size(); }
};

// Normalises log-weights into `w` and returns log(sum_i exp(logw_i)).
// Returns -inf (leaving w untouched) when every weight is zero.
double normalise_log_weights(std::span<const double> logw, std::span<double> w);

// Index j with probability w_j given u ~ U(0,1); rounding at the top end
// falls back to the last index with positive weight.
std::size_t sample_index(std::span<const double> w, double u);

// sum_t log(N^{-1} sum_i w̄_t^i)
double estimate_loglik(const ParticleSystem& ps);

template <class F>
double filter_expectation(const ParticleSystem& ps, std::size_t t, F&& phi) {
    double s = 0.0;
    const auto& x = ps.particles.at(t);
    const auto& w = ps.weights.at(t);
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * phi(x[i]);
    return s;
}

// Ancestral path ending in particle `index` at the final time.
std::vector<double> trace_lineage(const ParticleSystem& ps, std::size_t index);

// One path per final-time particle, ordered as the final particles.
std::vector<std::vector<double>> trace_genealogy(const ParticleSystem& ps);

}  // namespace ssmid
