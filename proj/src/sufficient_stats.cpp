#include "ssmid/sufficient_stats.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <utility>

#include "ssmid/errors.hpp"

namespace ssmid {

SufficientStats trajectory_statistics(std::span<const double> x) {
    if (x.size() < 2) throw DomainError("trajectory_statistics: need at least two time steps");
    SufficientStats s;
    const std::size_t n = x.size() - 1;
    for (std::size_t t = 0; t < n; ++t) {
        s.cross += x[t + 1] * x[t];
        s.lead_sq += x[t + 1] * x[t + 1];
        s.lag_sq += x[t] * x[t];
    }
    const double inv = 1.0 / static_cast<double>(n);
    s.cross *= inv;
    s.lead_sq *= inv;
    s.lag_sq *= inv;
    s.initial_sq = x[0] * x[0];
    return s;
}

SufficientStats weighted_statistics(const std::vector<std::vector<double>>& paths, std::span<const double> weights) {
    if (paths.size() != weights.size() || paths.empty()) throw DomainError("weighted_statistics: size mismatch");
    SufficientStats s;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (weights[i] == 0.0) continue;
        const auto si = trajectory_statistics(paths[i]);
        s.cross += weights[i] * si.cross;
        s.lead_sq += weights[i] * si.lead_sq;
        s.lag_sq += weights[i] * si.lag_sq;
        s.initial_sq += weights[i] * si.initial_sq;
    }
    return s;
}

SufficientStats stochastic_update(const SufficientStats& prev, const SufficientStats& fresh, double step) {
    if (!(step > 0.0 && step <= 1.0)) throw DomainError("stochastic_update: step must lie in (0, 1]");
    const double k = 1.0 - step;
    return {k * prev.cross + step * fresh.cross, k * prev.lead_sq + step * fresh.lead_sq,
            k * prev.lag_sq + step * fresh.lag_sq, k * prev.initial_sq + step * fresh.initial_sq};
}

double saem_objective(double phi, double tau, const SufficientStats& s, std::size_t T) {
    const double k = 1.0 - phi * phi;
    const double n = static_cast<double>(T) - 1.0;
    return -std::log(k * tau) + s.initial_sq * k * tau +
           n * (-std::log(tau) + tau * (s.lead_sq - 2.0 * s.cross * phi + phi * phi * s.lag_sq));
}

SaemInitialiser saem_initialiser(const SufficientStats& s) {
    SaemInitialiser init{0.0, 1.0, false};
    if (!(s.lag_sq > 0.0)) return init;
    const double phi = s.cross / s.lag_sq;
    const double resid = s.lead_sq - s.cross * s.cross / s.lag_sq;
    init.phi = phi;
    init.tau = resid > 0.0 ? 1.0 / resid : std::numeric_limits<double>::infinity();
    init.valid = resid > 0.0 && std::abs(phi) < 1.0;
    return init;
}

namespace {

// Profiled objective: with tau at its conditional optimum T / h(phi),
// f = -log(1-phi^2) + T log h(phi) + const, where
// h(phi) = X (1-phi^2) + (T-1)(Phi - 2 Psi phi + phi^2 Sigma).
struct Profile {
    const SufficientStats& s;
    double T;

    double h(double phi) const {
        return s.initial_sq * (1.0 - phi * phi) + (T - 1.0) * (s.lead_sq - 2.0 * s.cross * phi + phi * phi * s.lag_sq);
    }
    double value(double phi) const { return -std::log(1.0 - phi * phi) + T * std::log(h(phi)); }
    std::pair<double, double> derivatives(double phi) const {
        const double k = 1.0 - phi * phi;
        const double hv = h(phi);
        const double h1 = -2.0 * s.initial_sq * phi + (T - 1.0) * (2.0 * phi * s.lag_sq - 2.0 * s.cross);
        const double h2 = -2.0 * s.initial_sq + 2.0 * (T - 1.0) * s.lag_sq;
        const double d1 = 2.0 * phi / k + T * h1 / hv;
        const double d2 = 2.0 * (1.0 + phi * phi) / (k * k) + T * (h2 * hv - h1 * h1) / (hv * hv);
        return {d1, d2};
    }
};

double newton_phi(const Profile& prof, double guess) {
    constexpr double edge = 1e-12;
    const double lo = -1.0 + edge;
    const double hi = 1.0 - edge;
    guess = std::clamp(guess, lo, hi);
    std::uintmax_t iters = 200;
    return boost::math::tools::newton_raphson_iterate([&](double p) { return prof.derivatives(p); }, guess, lo, hi, 40,
                                                      iters);
}

}  // namespace

VarveParams minimise_saem_objective(const SufficientStats& s, std::size_t T) {
    if (T < 2) throw DomainError("minimise_saem_objective: T must be at least 2");
    const Profile prof{s, static_cast<double>(T)};
    const auto init = saem_initialiser(s);
    double phi = newton_phi(prof, init.valid ? init.phi : 0.0);

    // guard against converging to a non-minimising stationary point
    double best = prof.value(phi);
    double best_grid = phi;
    for (int i = 1; i < 400; ++i) {
        const double p = -1.0 + 2.0 * i / 400.0;
        const double v = prof.value(p);
        if (v < best - 1e-12) {
            best = v;
            best_grid = p;
        }
    }
    if (best_grid != phi) phi = newton_phi(prof, best_grid);

    const double hv = prof.h(phi);
    if (!(hv > 0.0) || !std::isfinite(hv)) throw NumericalError("minimise_saem_objective: degenerate statistics");
    VarveParams out;
    out.phi = phi;
    out.tau = static_cast<double>(T) / hv;
    return out;
}

double minimise_saem_objective_tau(const SufficientStats& s, std::size_t T, double a) {
    const Profile prof{s, static_cast<double>(T)};
    const double hv = prof.h(a);
    if (!(hv > 0.0) || !std::isfinite(hv)) throw NumericalError("minimise_saem_objective_tau: degenerate statistics");
    return static_cast<double>(T) / hv;
}

}  // namespace ssmid
