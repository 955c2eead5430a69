#include "ssmid/em.hpp"

namespace ssmid {

EmResult em_lgss(const LgssParams& base, std::span<const double> y, double theta0, std::size_t K, double tolerance) {
    if (!(theta0 > 0.0)) throw ParameterSpaceError("em_lgss: theta0 must be positive");
    const std::size_t T = y.size();
    const double a = base.a;
    EmResult res;
    LgssParams p = base;
    p.theta = theta0;
    res.thetas.push_back(theta0);
    auto filter = kalman_filter(p, y);
    res.logliks.push_back(filter.loglik);
    for (std::size_t k = 0; k < K && T > 0; ++k) {
        const auto sm = rts_smoother(filter);
        double denom = (1.0 - a * a) * (sm.mean[0] * sm.mean[0] + sm.var[0]);
        for (std::size_t t = 0; t + 1 < T; ++t) {
            const double exx_next = sm.mean[t + 1] * sm.mean[t + 1] + sm.var[t + 1];
            const double exx = sm.mean[t] * sm.mean[t] + sm.var[t];
            const double cross = sm.mean[t + 1] * sm.mean[t] + sm.cross_cov[t + 1];
            denom += exx_next - 2.0 * a * cross + a * a * exx;
        }
        const double next = static_cast<double>(T) / denom;
        const double change = std::abs(next - p.theta);
        p.theta = next;
        filter = kalman_filter(p, y);
        res.thetas.push_back(next);
        res.logliks.push_back(filter.loglik);
        if (change < tolerance) {
            res.converged = true;
            break;
        }
    }
    res.estimate = p.theta;
    return res;
}

std::vector<double> fisher_gradient(const LgssModel&, const LgssParams& params,
                                    const std::vector<std::vector<double>>& trajectories, std::span<const double> weights) {
    if (trajectories.size() != weights.size()) throw DomainError("fisher_gradient: size mismatch");
    double g = 0.0;
    for (std::size_t i = 0; i < trajectories.size(); ++i) g += weights[i] * lgss_score(params, trajectories[i]);
    return {g};
}

std::vector<double> fisher_gradient(const VarveModel&, const VarveParams& params,
                                    const std::vector<std::vector<double>>& trajectories, std::span<const double> weights,
                                    VarveCoordinates coords) {
    if (trajectories.size() != weights.size()) throw DomainError("fisher_gradient: size mismatch");
    std::vector<double> g(2, 0.0);
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
        const auto s = varve_score(params, trajectories[i], coords);
        g[0] += weights[i] * s[0];
        g[1] += weights[i] * s[1];
    }
    return g;
}

LgssParams maximise_complete_data(const LgssModel&, const LgssParams& current, const SufficientStats& s, std::size_t T) {
    LgssParams p = current;
    p.theta = minimise_saem_objective_tau(s, T, current.a);
    return p;
}

VarveParams maximise_complete_data(const VarveModel&, const VarveParams&, const SufficientStats& s, std::size_t T) {
    return minimise_saem_objective(s, T);
}

}  // namespace ssmid
