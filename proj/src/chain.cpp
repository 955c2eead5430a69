#include "ssmid/chain.hpp"

#include <cmath>

#include "ssmid/errors.hpp"

namespace ssmid {

std::vector<double> ParameterChain::component(std::size_t j, bool after_burn_in) const {
    const std::size_t start = after_burn_in ? std::min(burn_in, draws.size()) : 0;
    std::vector<double> v;
    v.reserve(draws.size() - start);
    for (std::size_t m = start; m < draws.size(); ++m) v.push_back(draws[m].at(j));
    return v;
}

double ParameterChain::acceptance_rate() const {
    if (accepted.size() < 2) return 0.0;
    std::size_t n = 0;
    for (std::size_t m = 1; m < accepted.size(); ++m) n += accepted[m];
    return static_cast<double>(n) / static_cast<double>(accepted.size() - 1);
}

void ParameterChain::push(std::vector<double> theta, double ll, bool was_accepted, std::vector<double> proposal) {
    draws.push_back(std::move(theta));
    loglik.push_back(ll);
    accepted.push_back(was_accepted ? 1 : 0);
    proposals.push_back(std::move(proposal));
}

RandomWalkProposal::RandomWalkProposal(Eigen::MatrixXd covariance, double scale)
    : covariance_(std::move(covariance)), scale_(scale) {
    if (covariance_.rows() == 0 || covariance_.rows() != covariance_.cols())
        throw DomainError("RandomWalkProposal: covariance must be a nonempty square matrix");
    if (!(scale_ > 0.0)) throw DomainError("RandomWalkProposal: scale must be positive");
    if (!covariance_.isApprox(covariance_.transpose(), 1e-12))
        throw DomainError("RandomWalkProposal: covariance must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(scale_ * covariance_);
    if (llt.info() != Eigen::Success) throw DomainError("RandomWalkProposal: covariance must be positive definite");
    factor_ = llt.matrixL();
}

RandomWalkProposal RandomWalkProposal::scalar(double variance) {
    Eigen::MatrixXd c(1, 1);
    c(0, 0) = variance;
    return RandomWalkProposal(c);
}

std::vector<double> RandomWalkProposal::sample(std::span<const double> current, Rng& rng) const {
    const auto d = static_cast<Eigen::Index>(current.size());
    if (d != covariance_.rows()) throw DomainError("RandomWalkProposal: dimension mismatch");
    std::normal_distribution<double> z;
    Eigen::VectorXd e(d);
    for (Eigen::Index i = 0; i < d; ++i) e(i) = z(rng);
    const Eigen::VectorXd step = factor_ * e;
    std::vector<double> out(current.begin(), current.end());
    for (Eigen::Index i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += step(i);
    return out;
}

ProposalSpace varve_variance_space() {
    ProposalSpace s;
    s.to_proposal = [](std::span<const double> th) { return std::vector<double>{th[0], 1.0 / th[1]}; };
    s.from_proposal = [](std::span<const double> u) { return std::vector<double>{u[0], 1.0 / u[1]}; };
    // tau = 1/v, |d tau / d v| = v^{-2}
    s.log_jacobian = [](std::span<const double> u) { return u[1] > 0.0 ? -2.0 * std::log(u[1]) : -INFINITY; };
    return s;
}

Eigen::MatrixXd chain_covariance(const ParameterChain& chain) {
    const std::size_t d = chain.dim();
    const std::size_t start = std::min(chain.burn_in, chain.size());
    const std::size_t n = chain.size() - start;
    if (n < 2) throw DomainError("chain_covariance: need at least two post-burn-in draws");
    Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t j = 0; j < d; ++j)
            X(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(j)) = chain.draws[start + m][j];
    const Eigen::RowVectorXd mean = X.colwise().mean();
    const Eigen::MatrixXd centred = X.rowwise() - mean;
    return centred.transpose() * centred / static_cast<double>(n - 1);
}

}  // namespace ssmid
