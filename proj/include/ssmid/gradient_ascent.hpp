#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ssmid {

struct GradientEvaluation {
    std::vector<double> gradient;
    double objective = NAN;  // log-likelihood (exact or estimated) if the provider knows it
};

using GradientProvider = std::function<GradientEvaluation(std::span<const double>)>;
using ObjectiveFunction = std::function<double(std::span<const double>)>;

struct AscentConfig {
    std::vector<double> theta0;
    double gamma = 0.01;
    // step at iteration k is gamma * k^{-alpha}; alpha = 0 gives a constant step
    double alpha = 0.0;
    std::size_t max_iterations = 100;
    double tolerance = 1e-6;
    // Halve the step until the objective does not decrease (needs an objective).
    bool backtracking = false;
    std::size_t max_halvings = 60;
    // Optional box; iterates leaving it are projected to boundary + epsilon.
    std::vector<double> lower;
    std::vector<double> upper;
    double boundary_epsilon = 1e-8;
};

struct AscentIterate {
    std::size_t k = 0;
    std::vector<double> theta;
    double objective = NAN;
    double step_size = 0.0;
};

struct AscentResult {
    std::vector<double> estimate;
    std::vector<AscentIterate> history;  // history[0] is the initial point
    std::vector<std::string> warnings;
    bool converged = false;
};

// theta_k = theta_{k-1} + gamma k^{-alpha} g(theta_{k-1}).
AscentResult gradient_ascent_ml(const GradientProvider& provider, const AscentConfig& config,
                                const ObjectiveFunction& objective = {});

}  // namespace ssmid
