#include "ssmid/kalman.hpp"

#include <cmath>

#include "ssmid/densities.hpp"
#include "ssmid/errors.hpp"

namespace ssmid {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw NumericalError(std::string("Kalman: nonpositive variance in ") + what);
}

}  // namespace

KalmanRun kalman_filter(const LgssParams& p, std::span<const double> y) {
    validate(p);
    const std::size_t T = y.size();
    KalmanRun run;
    run.params = p;
    run.predicted_mean.resize(T);
    run.predicted_var.resize(T);
    run.innovation_var.resize(T);
    run.gain.resize(T);
    run.filtered_mean.resize(T);
    run.filtered_var.resize(T);

    const double q = 1.0 / p.theta;
    double xp = 0.0;
    double P = stationary_initial(p).variance;
    double V = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        require_positive(P, "prediction");
        const double lambda = p.c * p.c * P + p.r;
        require_positive(lambda, "innovation");
        const double e = y[t] - p.c * xp;
        const double K = p.a * p.c * P / lambda;
        run.predicted_mean[t] = xp;
        run.predicted_var[t] = P;
        run.innovation_var[t] = lambda;
        run.gain[t] = K;
        run.filtered_mean[t] = xp + p.c * P / lambda * e;
        run.filtered_var[t] = P * p.r / lambda;
        require_positive(run.filtered_var[t], "filtering");
        V += -0.5 * (kLogTwoPi + std::log(lambda) + e * e / lambda);

        const double xn = p.a * xp + K * e;
        const double Pn = p.a * p.a * P + q - p.a * p.c * K * P;
        xp = xn;
        P = Pn;
    }
    run.loglik = V;
    return run;
}

SensitivityRun kalman_sensitivity(const LgssParams& p, std::span<const double> y) {
    validate(p);
    const std::size_t T = y.size();
    SensitivityRun s;
    s.d_predicted_mean.resize(T);
    s.d_predicted_var.resize(T);
    s.d_gain.resize(T);

    const double a = p.a;
    const double c = p.c;
    const double th = p.theta;
    double xp = 0.0;
    double P = stationary_initial(p).variance;
    double dx = 0.0;
    double dP = -1.0 / ((1.0 - a * a) * th * th);
    double grad = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        const double lambda = c * c * P + p.r;
        require_positive(lambda, "innovation");
        const double dlambda = c * c * dP;
        const double e = y[t] - c * xp;
        const double K = a * c * P / lambda;
        const double dK = a * c * dP / lambda * (1.0 - c * c * P / lambda);
        s.d_predicted_mean[t] = dx;
        s.d_predicted_var[t] = dP;
        s.d_gain[t] = dK;

        // d/dtheta of -0.5 (log lambda + e^2 / lambda), with de/dtheta = -c dx
        grad += -0.5 * (dlambda / lambda - 2.0 * e * c * dx / lambda - e * e * dlambda / (lambda * lambda));

        const double dx_next = (a - K * c) * dx + e * dK;
        const double dP_next = (a * a - a * c * K) * dP - 1.0 / (th * th) - a * c * P * dK;
        xp = a * xp + K * e;
        P = a * a * P + 1.0 / th - a * c * K * P;
        dx = dx_next;
        dP = dP_next;
    }
    s.gradient = grad;
    return s;
}

double kalman_gradient(const LgssParams& p, std::span<const double> y) { return kalman_sensitivity(p, y).gradient; }

SmootherRun rts_smoother(const KalmanRun& f) {
    const std::size_t T = f.size();
    const double a = f.params.a;
    SmootherRun s;
    s.mean.resize(T);
    s.var.resize(T);
    s.cross_cov.assign(T, 0.0);
    if (T == 0) return s;
    s.mean[T - 1] = f.filtered_mean[T - 1];
    s.var[T - 1] = f.filtered_var[T - 1];
    for (std::size_t t = T - 1; t-- > 0;) {
        const double J = f.filtered_var[t] * a / f.predicted_var[t + 1];
        s.mean[t] = f.filtered_mean[t] + J * (s.mean[t + 1] - f.predicted_mean[t + 1]);
        s.var[t] = f.filtered_var[t] + J * J * (s.var[t + 1] - f.predicted_var[t + 1]);
        require_positive(s.var[t], "smoothing");
        s.cross_cov[t + 1] = J * s.var[t + 1];
    }
    return s;
}

SmootherRun rts_smoother(const LgssParams& p, std::span<const double> y) { return rts_smoother(kalman_filter(p, y)); }

std::vector<double> backward_sample(const LgssParams& p, const KalmanRun& f, Rng& rng) {
    const std::size_t T = f.size();
    std::vector<double> x(T);
    if (T == 0) return x;
    std::normal_distribution<double> z;
    x[T - 1] = f.filtered_mean[T - 1] + std::sqrt(f.filtered_var[T - 1]) * z(rng);
    const double q = 1.0 / p.theta;
    for (std::size_t t = T - 1; t-- > 0;) {
        const double P = f.filtered_var[t];
        const double denom = q + p.a * p.a * P;
        const double mu = f.filtered_mean[t] + p.a * P / denom * (x[t + 1] - p.a * f.filtered_mean[t]);
        const double var = P - p.a * p.a * P * P / denom;
        require_positive(var, "backward kernel");
        x[t] = mu + std::sqrt(var) * z(rng);
    }
    return x;
}

}  // namespace ssmid
