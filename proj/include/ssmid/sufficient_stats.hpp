#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ssmid/varve.hpp"

namespace ssmid {

// AR(1) complete-data statistics of a trajectory x_{1:T}:
//   cross      = mean of x_{t+1} x_t, t = 1..T-1
//   lead_sq    = mean of x_t^2,       t = 2..T
//   lag_sq     = mean of x_t^2,       t = 1..T-1
//   initial_sq = x_1^2
struct SufficientStats {
    double cross = 0.0;
    double lead_sq = 0.0;
    double lag_sq = 0.0;
    double initial_sq = 0.0;
};

SufficientStats trajectory_statistics(std::span<const double> x);
SufficientStats weighted_statistics(const std::vector<std::vector<double>>& paths, std::span<const double> weights);

// (1 - step) * prev + step * fresh, componentwise; step in (0, 1].
SufficientStats stochastic_update(const SufficientStats& prev, const SufficientStats& fresh, double step);

// f(theta; S) = -log((1-phi^2) tau) + X (1-phi^2) tau + (T-1) { -log tau + tau (Phi - 2 Psi phi + phi^2 Sigma) }
double saem_objective(double phi, double tau, const SufficientStats& s, std::size_t T);

struct SaemInitialiser {
    double phi;
    double tau;
    bool valid;  // false when Phi - Psi^2 / Sigma <= 0 or |phi| >= 1
};

SaemInitialiser saem_initialiser(const SufficientStats& s);

// Minimiser of f over |phi| < 1, tau > 0. tau is profiled out in closed form and
// the stationarity condition in phi is solved by safeguarded Newton from the initialiser.
VarveParams minimise_saem_objective(const SufficientStats& s, std::size_t T);

// Minimiser over tau with phi pinned to a.
double minimise_saem_objective_tau(const SufficientStats& s, std::size_t T, double a);

}  // namespace ssmid
