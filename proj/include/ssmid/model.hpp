#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ssmid/errors.hpp"
#include "ssmid/random.hpp"

namespace ssmid {

// Scalar-state, scalar-observation state-space model. Time indices are 0-based.
template <class M>
concept StateSpaceModel = requires(const M& m, const typename M::Params& p, double x, double x_next,
                                   double y, std::size_t t, Rng& rng) {
    { m.sample_initial(p, rng) } -> std::same_as<double>;
    { m.initial_logpdf(p, x) } -> std::same_as<double>;
    { m.sample_transition(p, x, t, rng) } -> std::same_as<double>;
    { m.transition_logpdf(p, x, x_next, t) } -> std::same_as<double>;
    { m.observation_logpdf(p, x, y, t) } -> std::same_as<double>;
    { m.sample_observation(p, x, t, rng) } -> std::same_as<double>;
    { m.log_prior(p) } -> std::same_as<double>;
    { m.validate(p) };
    { M::param_dim } -> std::convertible_to<std::size_t>;
};

// Models whose free parameters can be packed into a flat vector (needed by the
// parameter samplers and optimisers).
template <class M>
concept ParameterisedModel = StateSpaceModel<M> &&
    requires(const M& m, const typename M::Params& p, std::span<const double> v) {
        { m.to_vector(p) } -> std::same_as<std::vector<double>>;
        { m.from_vector(v, p) } -> std::same_as<typename M::Params>;
        { m.in_support(p) } -> std::same_as<bool>;
        { m.parameter_names() } -> std::same_as<std::vector<std::string>>;
    };

// Models with a finite supremum of the transition density (log scale).
template <class M>
concept BoundedTransition = StateSpaceModel<M> && requires(const M& m, const typename M::Params& p) {
    { m.transition_log_bound(p) } -> std::same_as<double>;
};

struct Simulation {
    std::vector<double> states;
    std::vector<double> observations;
};

template <StateSpaceModel M>
Simulation simulate(const M& model, const typename M::Params& params, std::size_t T, Rng& rng) {
    model.validate(params);
    Simulation out;
    out.states.reserve(T);
    out.observations.reserve(T);
    double x = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        x = t == 0 ? model.sample_initial(params, rng) : model.sample_transition(params, x, t - 1, rng);
        out.states.push_back(x);
        out.observations.push_back(model.sample_observation(params, x, t, rng));
    }
    return out;
}

template <StateSpaceModel M>
double log_joint(const M& model, const typename M::Params& params, std::span<const double> x,
                 std::span<const double> y) {
    if (x.size() != y.size()) throw DomainError("log_joint: states and observations differ in length");
    if (x.empty()) throw DomainError("log_joint: empty trajectory");
    double lp = model.initial_logpdf(params, x[0]);
    for (std::size_t t = 0; t < x.size(); ++t) {
        lp += model.observation_logpdf(params, x[t], y[t], t);
        if (t + 1 < x.size()) lp += model.transition_logpdf(params, x[t], x[t + 1], t);
    }
    return lp;
}

struct StationaryMoments {
    double mean = 0.0;
    double variance = 0.0;
};

// Mean and variance of a stationary AR(1) with coefficient a and noise precision.
StationaryMoments stationary_ar1(double coefficient, double precision);

}  // namespace ssmid
