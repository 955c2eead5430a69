#include "ssmid/varve.hpp"

#include <limits>

namespace ssmid {

const double VarveModel::kLogRateScale = std::log(VarveParams::obs_rate_scale);
const double VarveModel::kLogGammaShape = std::lgamma(VarveParams::obs_shape);

void validate(const VarveParams& p) {
    if (!(std::abs(p.phi) < 1.0)) throw ParameterSpaceError("varve: |phi| must be below 1");
    if (!(p.tau > 0.0) || !std::isfinite(p.tau)) throw ParameterSpaceError("varve: tau must be positive");
}

StationaryMoments stationary_initial(const VarveParams& p) { return stationary_ar1(p.phi, p.tau); }

VarveModel::VarveModel(double prior_shape, double prior_rate) : prior_shape_(prior_shape), prior_rate_(prior_rate) {
    if (!(prior_shape > 0.0) || !(prior_rate > 0.0)) throw DomainError("varve prior: shape and rate must be positive");
}

double VarveModel::log_prior(const Params& p) const {
    if (!in_support(p)) return -std::numeric_limits<double>::infinity();
    return -std::log(2.0) + gamma_logpdf(p.tau, prior_shape_, prior_rate_);
}

VarveParams VarveModel::from_vector(std::span<const double> v, const Params& base) const {
    if (v.size() != param_dim) throw DomainError("varve: expected two free parameters");
    Params p = base;
    p.phi = v[0];
    p.tau = v[1];
    return p;
}

double varve_complete_loglik(const VarveParams& p, std::span<const double> x) {
    if (x.empty()) return 0.0;
    const double k = 1.0 - p.phi * p.phi;
    double s = std::log(k * p.tau) - k * p.tau * x[0] * x[0];
    for (std::size_t t = 0; t + 1 < x.size(); ++t) {
        const double d = x[t + 1] - p.phi * x[t];
        s += std::log(p.tau) - p.tau * d * d;
    }
    return 0.5 * s;
}

std::array<double, 2> varve_score(const VarveParams& p, std::span<const double> x, VarveCoordinates coords) {
    if (x.empty()) return {0.0, 0.0};
    const double phi = p.phi;
    const double tau = p.tau;
    const double k = 1.0 - phi * phi;
    double cross = 0.0;  // sum x_t (x_{t+1} - phi x_t)
    double ss = 0.0;     // sum (x_{t+1} - phi x_t)^2
    for (std::size_t t = 0; t + 1 < x.size(); ++t) {
        const double d = x[t + 1] - phi * x[t];
        cross += x[t] * d;
        ss += d * d;
    }
    const double x1sq = x[0] * x[0];
    const double T = static_cast<double>(x.size());
    // d/d atanh(phi) = (1 - phi^2) d/dphi, d/d log(tau) = tau d/dtau
    const double g_phi_t = -phi + k * tau * (phi * x1sq + cross);
    const double g_tau_t = 0.5 * (T - tau * k * x1sq - tau * ss);
    if (coords == VarveCoordinates::transformed) return {g_phi_t, g_tau_t};
    return {g_phi_t / k, g_tau_t / tau};
}

std::array<double, 2> varve_to_transformed(const VarveParams& p) { return {std::atanh(p.phi), std::log(p.tau)}; }

VarveParams varve_from_transformed(double phi_t, double tau_t) {
    VarveParams p;
    p.phi = std::tanh(phi_t);
    p.tau = std::exp(tau_t);
    return p;
}

}  // namespace ssmid
