#include "ssmid/gradient_ascent.hpp"

#include <algorithm>
#include <sstream>

#include "ssmid/errors.hpp"

namespace ssmid {

namespace {

bool project(std::vector<double>& theta, const AscentConfig& cfg, std::size_t k, std::vector<std::string>& warnings) {
    bool moved = false;
    for (std::size_t j = 0; j < theta.size(); ++j) {
        if (j < cfg.lower.size() && !(theta[j] > cfg.lower[j])) {
            theta[j] = cfg.lower[j] + cfg.boundary_epsilon;
            moved = true;
        }
        if (j < cfg.upper.size() && !(theta[j] < cfg.upper[j])) {
            theta[j] = cfg.upper[j] - cfg.boundary_epsilon;
            moved = true;
        }
    }
    if (moved) {
        std::ostringstream os;
        os << "iteration " << k << ": iterate left the parameter space and was projected back";
        warnings.push_back(os.str());
    }
    return moved;
}

}  // namespace

AscentResult gradient_ascent_ml(const GradientProvider& provider, const AscentConfig& cfg,
                                const ObjectiveFunction& objective) {
    if (cfg.theta0.empty()) throw ConfigError("gradient_ascent_ml: empty initial point");
    if (!(cfg.gamma > 0.0)) throw ConfigError("gradient_ascent_ml: gamma must be positive");
    if (cfg.alpha < 0.0) throw ConfigError("gradient_ascent_ml: the decay exponent must be nonnegative");
    if (cfg.backtracking && !objective) throw ConfigError("gradient_ascent_ml: backtracking needs an objective");

    AscentResult res;
    std::vector<double> theta = cfg.theta0;
    project(theta, cfg, 0, res.warnings);
    double current_obj = objective ? objective(theta) : NAN;
    res.history.push_back({0, theta, current_obj, 0.0});

    for (std::size_t k = 1; k <= cfg.max_iterations; ++k) {
        const GradientEvaluation ev = provider(theta);
        if (ev.gradient.size() != theta.size()) throw DomainError("gradient_ascent_ml: gradient has the wrong size");
        for (double g : ev.gradient)
            if (!std::isfinite(g)) throw NumericalError("gradient_ascent_ml: non-finite gradient");

        double step = cfg.gamma * std::pow(static_cast<double>(k), -cfg.alpha);
        std::vector<double> next(theta.size());
        double next_obj = NAN;
        for (std::size_t halvings = 0;; ++halvings) {
            for (std::size_t j = 0; j < theta.size(); ++j) next[j] = theta[j] + step * ev.gradient[j];
            project(next, cfg, k, res.warnings);
            if (!cfg.backtracking) {
                next_obj = objective ? objective(next) : NAN;
                break;
            }
            next_obj = objective(next);
            if (next_obj >= current_obj || halvings >= cfg.max_halvings) break;
            step *= 0.5;
        }
        double change = 0.0;
        for (std::size_t j = 0; j < theta.size(); ++j) change = std::max(change, std::abs(next[j] - theta[j]));
        theta = next;
        current_obj = next_obj;
        // Without an explicit objective, record the provider's value at the point it was evaluated.
        res.history.push_back({k, theta, objective ? current_obj : NAN, step});
        if (!objective) res.history[k - 1].objective = ev.objective;
        if (change < cfg.tolerance) {
            res.converged = true;
            break;
        }
    }
    res.estimate = theta;
    return res;
}

}  // namespace ssmid
