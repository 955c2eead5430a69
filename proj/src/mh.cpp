#include "ssmid/mh.hpp"

#include "ssmid/densities.hpp"
#include "ssmid/kalman.hpp"

namespace ssmid {

ParameterChain metropolis_hastings(const LogDensityFunction& loglik, const LogDensityFunction& log_prior,
                                   const RandomWalkProposal& proposal, std::vector<double> theta0, std::size_t M,
                                   Rng& rng, const MhOptions& opts, std::vector<std::string> names) {
    if (theta0.size() != proposal.dim()) throw DomainError("metropolis_hastings: theta0 has the wrong dimension");
    const bool identity = opts.space.is_identity();
    auto to_u = [&](const std::vector<double>& th) { return identity ? th : opts.space.to_proposal(th); };
    auto log_jac = [&](const std::vector<double>& u) { return identity ? 0.0 : opts.space.log_jacobian(u); };

    ParameterChain chain;
    if (names.empty())
        for (std::size_t j = 0; j < theta0.size(); ++j) names.push_back("theta" + std::to_string(j));
    chain.names = std::move(names);
    chain.burn_in = opts.burn_in;

    double lp = log_prior(theta0);
    if (!(lp > -INFINITY)) throw DomainError("metropolis_hastings: theta0 is outside the prior support");
    double ll = loglik(theta0);
    if (!(ll > -INFINITY) || std::isnan(ll)) throw DomainError("metropolis_hastings: zero likelihood at theta0");
    std::vector<double> u = to_u(theta0);
    double lj = log_jac(u);
    chain.push(theta0, ll, true, theta0);

    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> theta = theta0;
    for (std::size_t m = 1; m <= M; ++m) {
        const std::vector<double> u_new = proposal.sample(u, rng);
        const std::vector<double> th_new = identity ? u_new : opts.space.from_proposal(u_new);
        const double lj_new = log_jac(u_new);
        double lp_new = -INFINITY;
        double ll_new = -INFINITY;
        if (lj_new > -INFINITY) lp_new = log_prior(th_new);
        // out-of-support proposals are rejected without running the likelihood
        if (lp_new > -INFINITY) ll_new = loglik(th_new);
        if (std::isnan(ll_new)) {
            ++chain.degenerate_proposals;
            ll_new = -INFINITY;
        }
        const double ratio = log_acceptance_ratio(ll_new, lp_new + lj_new, ll, lp + lj);
        const double log_u = std::log(unif(rng));
        const bool accept = ll_new > -INFINITY && lp_new > -INFINITY && log_u < ratio;
        if (accept) {
            theta = th_new;
            u = u_new;
            ll = ll_new;
            lp = lp_new;
            lj = lj_new;
        }
        chain.push(theta, ll, accept, th_new);
    }
    return chain;
}

ParameterChain mh_exact(const LgssModel& model, const LgssParams& base, std::span<const double> y,
                        const RandomWalkProposal& proposal, double theta0, std::size_t M, Rng& rng,
                        std::size_t burn_in) {
    LogDensityFunction loglik = [&](std::span<const double> th) {
        LgssParams p = base;
        p.theta = th[0];
        return kalman_filter(p, y).loglik;
    };
    LogDensityFunction log_prior = [&](std::span<const double> th) {
        LgssParams p = base;
        p.theta = th[0];
        return model.log_prior(p);
    };
    MhOptions opts;
    opts.burn_in = burn_in;
    return metropolis_hastings(loglik, log_prior, proposal, {theta0}, M, rng, opts, {"theta"});
}

double lgss_mh_log_ratio_closed_form(double V_new, double V_old, double theta_new, double theta_old) {
    return V_new - V_old - 0.99 * std::log(theta_new / theta_old) - 0.01 * (theta_new - theta_old);
}

}  // namespace ssmid
