#include "ssmid/particle_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ssmid {

double normalise_log_weights(std::span<const double> logw, std::span<double> w) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : logw) {
        if (std::isnan(v)) return std::numeric_limits<double>::quiet_NaN();
        m = std::max(m, v);
    }
    if (!std::isfinite(m)) return m == -std::numeric_limits<double>::infinity() ? m : std::numeric_limits<double>::quiet_NaN();
    double s = 0.0;
    for (std::size_t i = 0; i < logw.size(); ++i) {
        w[i] = std::exp(logw[i] - m);
        s += w[i];
    }
    for (double& v : w) v /= s;
    return m + std::log(s);
}

std::size_t sample_index(std::span<const double> w, double u) {
    double acc = 0.0;
    std::size_t last = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] > 0.0) last = j;
        acc += w[j];
        if (u < acc) return j;
    }
    return last;
}

double estimate_loglik(const ParticleSystem& ps) {
    double s = 0.0;
    for (double inc : ps.loglik_increments) s += inc;
    return s;
}

std::vector<double> trace_lineage(const ParticleSystem& ps, std::size_t index) {
    const std::size_t T = ps.length();
    std::vector<double> path(T);
    std::size_t k = index;
    for (std::size_t t = T; t-- > 0;) {
        path[t] = ps.particles[t][k];
        if (t > 0) k = ps.ancestors[t][k];
    }
    return path;
}

std::vector<std::vector<double>> trace_genealogy(const ParticleSystem& ps) {
    const std::size_t T = ps.length();
    const std::size_t N = ps.num_particles;
    std::vector<std::vector<double>> paths(N, std::vector<double>(T));
    if (T == 0) return paths;
    std::vector<std::size_t> idx(N);
    for (std::size_t i = 0; i < N; ++i) idx[i] = i;
    for (std::size_t t = T; t-- > 0;) {
        for (std::size_t i = 0; i < N; ++i) {
            paths[i][t] = ps.particles[t][idx[i]];
            if (t > 0) idx[i] = ps.ancestors[t][idx[i]];
        }
    }
    return paths;
}

}  // namespace ssmid
