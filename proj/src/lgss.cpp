#include "ssmid/lgss.hpp"

#include <limits>

namespace ssmid {

StationaryMoments stationary_ar1(double coefficient, double precision) {
    if (!(std::abs(coefficient) < 1.0)) throw DomainError("stationary_ar1: |coefficient| >= 1 is not stationary");
    if (!(precision > 0.0)) throw ParameterSpaceError("stationary_ar1: precision must be positive");
    return {0.0, 1.0 / ((1.0 - coefficient * coefficient) * precision)};
}

void validate(const LgssParams& p) {
    if (!(p.theta > 0.0) || !std::isfinite(p.theta)) throw ParameterSpaceError("LGSS: theta must be positive");
    if (!(std::abs(p.a) < 1.0)) throw ParameterSpaceError("LGSS: |a| must be below 1");
    if (!(p.r > 0.0) || !std::isfinite(p.r)) throw ParameterSpaceError("LGSS: r must be positive");
    if (!std::isfinite(p.c)) throw ParameterSpaceError("LGSS: c must be finite");
}

StationaryMoments stationary_initial(const LgssParams& p) { return stationary_ar1(p.a, p.theta); }

LgssModel::LgssModel(double prior_shape, double prior_rate) : prior_shape_(prior_shape), prior_rate_(prior_rate) {
    if (!(prior_shape > 0.0) || !(prior_rate > 0.0)) throw DomainError("LGSS prior: shape and rate must be positive");
}

double LgssModel::log_prior(const Params& p) const {
    if (!in_support(p)) return -std::numeric_limits<double>::infinity();
    return gamma_logpdf(p.theta, prior_shape_, prior_rate_);
}

LgssParams LgssModel::from_vector(std::span<const double> v, const Params& base) const {
    if (v.size() != param_dim) throw DomainError("LGSS: expected one free parameter");
    Params p = base;
    p.theta = v[0];
    return p;
}

double lgss_state_sum_of_squares(double a, std::span<const double> x) {
    if (x.empty()) return 0.0;
    double s = (1.0 - a * a) * x[0] * x[0];
    for (std::size_t t = 0; t + 1 < x.size(); ++t) {
        const double d = x[t + 1] - a * x[t];
        s += d * d;
    }
    return s;
}

double lgss_score(const LgssParams& p, std::span<const double> x) {
    return 0.5 * static_cast<double>(x.size()) / p.theta - 0.5 * lgss_state_sum_of_squares(p.a, x);
}

}  // namespace ssmid
