#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "ssmid/chain.hpp"
#include "ssmid/errors.hpp"
#include "ssmid/lgss.hpp"
#include "ssmid/model.hpp"
#include "ssmid/particle_filter.hpp"

namespace ssmid {

using LogDensityFunction = std::function<double(std::span<const double>)>;

struct MhOptions {
    std::size_t burn_in = 0;
    ProposalSpace space;  // identity when empty
};

// Random-walk MH. `loglik` may be a random estimate: it is evaluated once per
// proposal and the stored value is reused while the chain stays put, which is
// exactly the pseudo-marginal construction. A return of -inf rejects. A NaN is
// treated as a degenerate proposal.
ParameterChain metropolis_hastings(const LogDensityFunction& loglik, const LogDensityFunction& log_prior,
                                   const RandomWalkProposal& proposal, std::vector<double> theta0, std::size_t M,
                                   Rng& rng, const MhOptions& opts = {}, std::vector<std::string> names = {});

// log acceptance ratio for a symmetric proposal
inline double log_acceptance_ratio(double loglik_new, double logprior_new, double loglik_old, double logprior_old) {
    return (loglik_new + logprior_new) - (loglik_old + logprior_old);
}

// Exact-likelihood MH on theta for the LGSS model (Kalman likelihood).
ParameterChain mh_exact(const LgssModel& model, const LgssParams& base, std::span<const double> y,
                        const RandomWalkProposal& proposal, double theta0, std::size_t M, Rng& rng,
                        std::size_t burn_in = 0);

// Closed-form LGSS log acceptance ratio under the Gam(0.01, 0.01) prior.
double lgss_mh_log_ratio_closed_form(double V_new, double V_old, double theta_new, double theta_old);

struct PmhOptions {
    std::size_t N = 100;
    PfOptions pf;
    std::size_t burn_in = 0;
    ProposalSpace space;
};

template <ParameterisedModel M>
ParameterChain pmh(const M& model, const typename M::Params& base, std::span<const double> y,
                   const RandomWalkProposal& proposal, std::vector<double> theta0, std::size_t iterations, Rng& rng,
                   const PmhOptions& opts) {
    std::size_t degenerate = 0;
    // The filter draws from the same stream as the proposals, so the run is one deterministic sequence.
    LogDensityFunction loglik = [&](std::span<const double> th) -> double {
        if (y.empty()) return 0.0;
        const auto p = model.from_vector(th, base);
        try {
            return bootstrap_loglik(model, p, y, opts.N, opts.pf, rng);
        } catch (const DegeneracyError&) {
            ++degenerate;
            return -INFINITY;
        }
    };
    LogDensityFunction log_prior = [&](std::span<const double> th) {
        const auto p = model.from_vector(th, base);
        return model.in_support(p) ? model.log_prior(p) : -INFINITY;
    };
    MhOptions mo;
    mo.burn_in = opts.burn_in;
    mo.space = opts.space;
    auto chain = metropolis_hastings(loglik, log_prior, proposal, std::move(theta0), iterations, rng, mo,
                                     model.parameter_names());
    chain.degenerate_proposals = degenerate;
    return chain;
}

}  // namespace ssmid
