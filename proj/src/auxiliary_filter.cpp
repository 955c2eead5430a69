#include "ssmid/auxiliary_filter.hpp"

namespace ssmid {

namespace {

struct GaussianPosterior {
    double mean;
    double var;
};

// Combine the prior N(m, v) on x with y = c x + e, e ~ N(0, r).
GaussianPosterior condition(double m, double v, double c, double r, double y) {
    const double var = 1.0 / (1.0 / v + c * c / r);
    return {var * (m / v + c * y / r), var};
}

}  // namespace

ProposalSpec<LgssParams> lgss_fully_adapted_proposal() {
    using P = LgssParams;
    ProposalSpec<P> q;
    q.log_adjustment = [](const P& p, double x_prev, double y, std::size_t) {
        return normal_logpdf(y, p.c * p.a * x_prev, p.c * p.c / p.theta + p.r);
    };
    q.sample = [](const P& p, double x_prev, double y, std::size_t, Rng& rng) {
        const auto post = condition(p.a * x_prev, 1.0 / p.theta, p.c, p.r, y);
        return normal_draw(rng, post.mean, std::sqrt(post.var));
    };
    q.logpdf = [](const P& p, double x, double x_prev, double y, std::size_t) {
        const auto post = condition(p.a * x_prev, 1.0 / p.theta, p.c, p.r, y);
        return normal_logpdf(x, post.mean, post.var);
    };
    q.sample_initial = [](const P& p, double y, Rng& rng) {
        const auto post = condition(0.0, stationary_initial(p).variance, p.c, p.r, y);
        return normal_draw(rng, post.mean, std::sqrt(post.var));
    };
    q.initial_logpdf = [](const P& p, double x, double y) {
        const auto post = condition(0.0, stationary_initial(p).variance, p.c, p.r, y);
        return normal_logpdf(x, post.mean, post.var);
    };
    return q;
}

ProposalSpec<LgssParams> lgss_inflated_proposal(double inflation) {
    using P = LgssParams;
    if (!(inflation > 0.0)) throw DomainError("lgss_inflated_proposal: inflation must be positive");
    ProposalSpec<P> q;
    q.log_adjustment = [](const P&, double, double, std::size_t) { return 0.0; };
    q.sample = [inflation](const P& p, double x_prev, double, std::size_t, Rng& rng) {
        return normal_draw(rng, p.a * x_prev, std::sqrt(inflation / p.theta));
    };
    q.logpdf = [inflation](const P& p, double x, double x_prev, double, std::size_t) {
        return normal_logpdf(x, p.a * x_prev, inflation / p.theta);
    };
    q.sample_initial = [inflation](const P& p, double, Rng& rng) {
        return normal_draw(rng, 0.0, std::sqrt(inflation * stationary_initial(p).variance));
    };
    q.initial_logpdf = [inflation](const P& p, double x, double) {
        return normal_logpdf(x, 0.0, inflation * stationary_initial(p).variance);
    };
    return q;
}

}  // namespace ssmid
