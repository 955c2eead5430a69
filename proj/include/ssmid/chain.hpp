#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ssmid/random.hpp"

namespace ssmid {

// Row m holds theta[m]. accepted[m] records whether theta[m] came from an accepted
// proposal (row 0 is the initial state and counts as accepted); on rejection
// theta[m] and loglik[m] repeat row m-1. Burn-in is a view, nothing is discarded.
struct ParameterChain {
    std::vector<std::string> names;
    std::vector<std::vector<double>> draws;
    std::vector<double> loglik;
    std::vector<std::uint8_t> accepted;
    std::vector<std::vector<double>> proposals;
    std::size_t burn_in = 0;
    std::size_t degenerate_proposals = 0;

    std::size_t size() const noexcept { return draws.size(); }
    std::size_t dim() const noexcept { return names.size(); }
    // Component j from row burn_in onwards (or all rows).
    std::vector<double> component(std::size_t j, bool after_burn_in = true) const;
    double acceptance_rate() const;

    void push(std::vector<double> theta, double ll, bool was_accepted, std::vector<double> proposal);
};

class RandomWalkProposal {
public:
    // Proposal N(theta, scale * covariance).
    explicit RandomWalkProposal(Eigen::MatrixXd covariance, double scale = 1.0);
    static RandomWalkProposal scalar(double variance);

    std::vector<double> sample(std::span<const double> current, Rng& rng) const;

    std::size_t dim() const noexcept { return static_cast<std::size_t>(covariance_.rows()); }
    const Eigen::MatrixXd& covariance() const noexcept { return covariance_; }
    double scale() const noexcept { return scale_; }

private:
    Eigen::MatrixXd covariance_;
    double scale_;
    Eigen::MatrixXd factor_;
};

// Optional reparameterisation for the random walk. The chain still reports theta;
// proposals are made in u = to_proposal(theta), and log|d theta / d u| enters the ratio.
struct ProposalSpace {
    std::function<std::vector<double>(std::span<const double>)> to_proposal;
    std::function<std::vector<double>(std::span<const double>)> from_proposal;
    std::function<double(std::span<const double>)> log_jacobian;

    bool is_identity() const noexcept { return !to_proposal; }
};

// (phi, tau) <-> (phi, 1/tau)
ProposalSpace varve_variance_space();

// Sample covariance of the post-burn-in draws.
Eigen::MatrixXd chain_covariance(const ParameterChain& chain);

}  // namespace ssmid
