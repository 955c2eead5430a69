#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "ssmid/ffbsi.hpp"
#include "ssmid/kalman.hpp"
#include "ssmid/lgss.hpp"
#include "ssmid/particle_filter.hpp"
#include "ssmid/pgas.hpp"
#include "ssmid/sufficient_stats.hpp"
#include "ssmid/varve.hpp"

namespace ssmid {

struct EmResult {
    double estimate = 0.0;
    std::vector<double> thetas;   // thetas[0] = theta0
    std::vector<double> logliks;  // V(thetas[k])
    bool converged = false;
};

// Exact EM for theta with (a, c, r) held at base's values.
EmResult em_lgss(const LgssParams& base, std::span<const double> y, double theta0, std::size_t K,
                 double tolerance = 1e-6);

// sum_i w_i grad log p(x^i, y). Varve gradients default to (atanh phi, log tau).
std::vector<double> fisher_gradient(const LgssModel& model, const LgssParams& params,
                                    const std::vector<std::vector<double>>& trajectories, std::span<const double> weights);
std::vector<double> fisher_gradient(const VarveModel& model, const VarveParams& params,
                                    const std::vector<std::vector<double>>& trajectories, std::span<const double> weights,
                                    VarveCoordinates coords = VarveCoordinates::transformed);

// Complete-data M-steps from averaged statistics. LGSS updates theta only.
LgssParams maximise_complete_data(const LgssModel& model, const LgssParams& current, const SufficientStats& s,
                                  std::size_t T);
VarveParams maximise_complete_data(const VarveModel& model, const VarveParams& current, const SufficientStats& s,
                                   std::size_t T);

template <class Params>
struct EmTrace {
    Params estimate;
    std::vector<Params> history;  // history[0] is the initial point
    bool converged = false;
};

template <class Params>
using TrajectorySampler = std::function<std::vector<std::vector<double>>(const Params&, Rng&)>;

template <class M>
double max_param_change(const M& model, const typename M::Params& a, const typename M::Params& b) {
    const auto va = model.to_vector(a);
    const auto vb = model.to_vector(b);
    double d = 0.0;
    for (std::size_t j = 0; j < va.size(); ++j) d = std::max(d, std::abs(va[j] - vb[j]));
    return d;
}

// Monte Carlo EM where each E-step averages the statistics of sampled trajectories.
template <ParameterisedModel M>
EmTrace<typename M::Params> psem_with_sampler(const M& model, const typename M::Params& params0, std::size_t T,
                                              std::size_t K, const TrajectorySampler<typename M::Params>& sampler,
                                              Rng& rng, double tolerance = 0.0) {
    EmTrace<typename M::Params> out;
    out.estimate = params0;
    out.history.push_back(params0);
    for (std::size_t k = 0; k < K; ++k) {
        const auto trajs = sampler(out.estimate, rng);
        const std::vector<double> w(trajs.size(), 1.0 / static_cast<double>(trajs.size()));
        const auto next = maximise_complete_data(model, out.estimate, weighted_statistics(trajs, w), T);
        const double change = max_param_change(model, next, out.estimate);
        out.estimate = next;
        out.history.push_back(next);
        if (tolerance > 0.0 && change < tolerance) {
            out.converged = true;
            break;
        }
    }
    return out;
}

struct PsemOptions {
    std::size_t N = 500;
    std::size_t M = 100;
    std::size_t K = 50;
    PfOptions pf;
    FfbsiOptions ffbsi;
    double tolerance = 0.0;  // 0 runs all K iterations
};

// Particle-smoother EM: bootstrap PF + FFBSi at the current estimate each iteration.
template <ParameterisedModel M>
EmTrace<typename M::Params> psem(const M& model, const typename M::Params& params0, std::span<const double> y,
                                 const PsemOptions& opts, Rng& rng) {
    TrajectorySampler<typename M::Params> sampler = [&](const typename M::Params& p, Rng& r) {
        const auto ps = bootstrap_pf(model, p, y, opts.N, opts.pf, r);
        return ffbsi(model, p, ps, opts.M, opts.ffbsi, r).trajectories;
    };
    return psem_with_sampler(model, params0, y.size(), opts.K, sampler, rng, opts.tolerance);
}

using StepSequence = std::function<double(std::size_t)>;

inline StepSequence default_saem_steps() {
    return [](std::size_t k) { return std::pow(static_cast<double>(k), -0.7); };
}

struct PsaemOptions {
    std::size_t N = 5;
    std::size_t K = 2000;
    StepSequence step = default_saem_steps();
};

template <class Params>
struct PsaemResult {
    Params estimate;
    std::vector<Params> history;             // history[0] is the initial point
    std::vector<SufficientStats> stats;      // S-hat after each iteration
    std::vector<double> trajectory;          // final reference trajectory
};

// Particle SAEM driven by the PGAS kernel. An empty x0 starts from a bootstrap-PF draw at params0.
template <ParameterisedModel M>
PsaemResult<typename M::Params> psaem(const M& model, const typename M::Params& params0, std::span<const double> y,
                                      std::vector<double> x0, const PsaemOptions& opts, Rng& rng) {
    const std::size_t T = y.size();
    if (opts.N < 2) throw DomainError("psaem: N must be at least 2");
    if (T < 2) throw DomainError("psaem: need at least two observations");
    if (x0.empty()) {
        const auto ps = bootstrap_pf(model, params0, y, std::max<std::size_t>(opts.N, 2), PfOptions{}, rng);
        x0 = trace_lineage(ps, sample_index(ps.weights.back(), uniform01(rng)));
    }
    PsaemResult<typename M::Params> out;
    out.estimate = params0;
    out.history.push_back(params0);
    out.trajectory = std::move(x0);
    SufficientStats s_hat;
    for (std::size_t k = 1; k <= opts.K; ++k) {
        const double step = opts.step(k);
        if (!(step > 0.0 && step <= 1.0)) throw DomainError("psaem: step sizes must lie in (0, 1]");
        auto kern = pgas_kernel(model, out.estimate, y, opts.N, out.trajectory, rng);
        const auto paths = trace_genealogy(kern.system);
        const auto fresh = weighted_statistics(paths, kern.system.weights.back());
        s_hat = stochastic_update(s_hat, fresh, step);
        out.estimate = maximise_complete_data(model, out.estimate, s_hat, T);
        out.history.push_back(out.estimate);
        out.stats.push_back(s_hat);
        out.trajectory = std::move(kern.trajectory);
    }
    return out;
}

}  // namespace ssmid
