#include <doctest.h>

#include <cmath>

#include "ssmid/dataset.hpp"
#include "ssmid/diagnostics.hpp"
#include "ssmid/em.hpp"
#include "ssmid/gradient_ascent.hpp"
#include "ssmid/kalman.hpp"
#include "ssmid/sufficient_stats.hpp"

using namespace ssmid;

namespace {

std::vector<double> lgss_data(std::size_t T, std::uint64_t seed, const LgssParams& p = {}) {
    Rng rng(seed);
    return simulate(LgssModel{}, p, T, rng).observations;
}

double V(double theta, std::span<const double> y) {
    LgssParams p;
    p.theta = theta;
    return kalman_filter(p, y).loglik;
}

AscentResult exact_ascent(std::span<const double> y, double theta0, std::size_t K) {
    AscentConfig cfg;
    cfg.theta0 = {theta0};
    cfg.gamma = 0.05;
    cfg.max_iterations = K;
    cfg.tolerance = 1e-12;
    cfg.backtracking = true;
    cfg.lower = {0.0};
    auto provider = [&](std::span<const double> th) {
        LgssParams p;
        p.theta = th[0];
        return GradientEvaluation{{kalman_gradient(p, y)}, NAN};
    };
    auto objective = [&](std::span<const double> th) { return V(th[0], y); };
    return gradient_ascent_ml(provider, cfg, objective);
}

}  // namespace

TEST_CASE("gradient_ascent_ml: zero iterations returns the start") {
    const auto y = lgss_data(50, 1);
    const auto r = exact_ascent(y, 1.7, 0);
    CHECK(r.estimate == std::vector<double>{1.7});
    CHECK(r.history.size() == 1);
}

TEST_CASE("gradient_ascent_ml: constant and decaying steps on a quadratic") {
    // maximise -(x-3)^2 / 2
    auto provider = [](std::span<const double> th) { return GradientEvaluation{{3.0 - th[0]}, NAN}; };
    AscentConfig cfg;
    cfg.theta0 = {0.0};
    cfg.gamma = 0.5;
    cfg.max_iterations = 200;
    cfg.tolerance = 1e-12;
    auto r = gradient_ascent_ml(provider, cfg);
    CHECK(r.estimate[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(r.converged);
    cfg.alpha = 2.0 / 3.0;
    cfg.max_iterations = 3000;
    r = gradient_ascent_ml(provider, cfg);
    CHECK(r.history[2].step_size == doctest::Approx(0.5 * std::pow(2.0, -2.0 / 3.0)));
    CHECK(r.estimate[0] == doctest::Approx(3.0).epsilon(1e-6));

    // projection onto the box keeps iterates feasible
    cfg.alpha = 0.0;
    cfg.gamma = 10.0;
    cfg.max_iterations = 3;
    cfg.upper = {1.0};
    r = gradient_ascent_ml(provider, cfg);
    for (const auto& it : r.history) CHECK(it.theta[0] < 1.0);
}

TEST_CASE("exact DO and EM reach the same maximiser") {
    LgssParams truth;
    const auto y = lgss_data(100, 2024, truth);
    const auto doml = exact_ascent(y, 1.0, 2000);
    const auto em = em_lgss(truth, y, 1.0, 2000, 1e-12);
    CHECK(std::abs(doml.estimate[0] - em.estimate) < 1e-3);
    LgssParams p;
    p.theta = em.estimate;
    CHECK(std::abs(kalman_gradient(p, y)) < 1e-6);
    p.theta = doml.estimate[0];
    CHECK(std::abs(kalman_gradient(p, y)) < 1e-6);
    CHECK(std::abs(em.estimate - 1.0) > 1e-3);
}

TEST_CASE("em_lgss: monotone likelihood and fixed point") {
    CHECK(em_lgss(LgssParams{}, lgss_data(30, 3), 0.4, 0).estimate == 0.4);
    for (std::uint64_t s = 0; s < 20; ++s) {
        LgssParams truth;
        truth.theta = 0.5 + 0.1 * static_cast<double>(s);
        const auto y = lgss_data(60 + s, 100 + s, truth);
        const auto em = em_lgss(truth, y, 3.0, 300, 0.0);
        for (std::size_t k = 1; k < em.logliks.size(); ++k) CHECK(em.logliks[k] >= em.logliks[k - 1] - 1e-10);
        CHECK(em.logliks.front() == doctest::Approx(V(3.0, y)));
    }
    const auto y = lgss_data(100, 11);
    const auto em = em_lgss(LgssParams{}, y, 1.0, 5000, 1e-12);
    LgssParams p;
    p.theta = em.estimate;
    CHECK(std::abs(kalman_gradient(p, y)) < 1e-6);
}

TEST_CASE("fisher_gradient: LGSS with exact smoothing draws") {
    const LgssParams p;
    const auto y = lgss_data(50, 8);
    const auto kf = kalman_filter(p, y);
    Rng rng(3);
    const std::size_t R = 10000;
    std::vector<double> scores;
    std::vector<std::vector<double>> traj;
    for (std::size_t r = 0; r < R; ++r) {
        traj.push_back(backward_sample(p, kf, rng));
        scores.push_back(lgss_score(p, traj.back()));
    }
    const std::vector<double> w(R, 1.0 / R);
    const double g = fisher_gradient(LgssModel{}, p, traj, w)[0];
    CHECK(g == doctest::Approx(sample_mean(scores)).epsilon(1e-10));
    CHECK(std::abs(g - kalman_gradient(p, y)) < 3 * std::sqrt(sample_variance(scores) / R));
}

TEST_CASE("varve score matches finite differences of the complete-data likelihood") {
    Rng rng(4);
    const auto sim = simulate(VarveModel{}, VarveParams{0.9, 20.0}, 60, rng);
    const auto& x = sim.states;
    for (VarveParams p : {VarveParams{0.9, 20.0}, VarveParams{-0.3, 2.0}, VarveParams{0.99, 150.0}}) {
        const auto t = varve_to_transformed(p);
        auto L = [&](double a, double b) { return varve_complete_loglik(varve_from_transformed(a, b), x); };
        const double h = 1e-5;
        const double d0 = (L(t[0] + h, t[1]) - L(t[0] - h, t[1])) / (2 * h);
        const double d1 = (L(t[0], t[1] + h) - L(t[0], t[1] - h)) / (2 * h);
        const auto g = varve_score(p, x);
        CHECK(std::abs(g[0] - d0) < 1e-6 * std::abs(d0) + 1e-7);
        CHECK(std::abs(g[1] - d1) < 1e-6 * std::abs(d1) + 1e-7);

        auto Lr = [&](double phi, double tau) { return varve_complete_loglik(VarveParams{phi, tau}, x); };
        const double hp = 1e-7, ht = 1e-6 * p.tau;
        const auto gr = varve_score(p, x, VarveCoordinates::raw);
        CHECK(gr[0] == doctest::Approx((Lr(p.phi + hp, p.tau) - Lr(p.phi - hp, p.tau)) / (2 * hp)).epsilon(1e-5));
        CHECK(gr[1] == doctest::Approx((Lr(p.phi, p.tau + ht) - Lr(p.phi, p.tau - ht)) / (2 * ht)).epsilon(1e-5));
    }
    // at phi = 0 the phi-derivative is tau sum x_t x_{t+1}
    double cross = 0.0;
    for (std::size_t t = 0; t + 1 < x.size(); ++t) cross += x[t] * x[t + 1];
    CHECK(varve_score(VarveParams{0.0, 7.0}, x)[0] == doctest::Approx(7.0 * cross).epsilon(1e-12));
}

TEST_CASE("closed-form initialiser minimises the transition part of the objective") {
    Rng rng(10);
    for (int i = 0; i < 100; ++i) {
        SufficientStats s;
        s.lag_sq = 0.2 + 2.0 * uniform01(rng);
        s.cross = (2.0 * uniform01(rng) - 1.0) * 0.95 * s.lag_sq;
        s.lead_sq = s.cross * s.cross / s.lag_sq + 0.05 + uniform01(rng);
        const auto init = saem_initialiser(s);
        REQUIRE(init.valid);
        CHECK(init.phi == doctest::Approx(s.cross / s.lag_sq).epsilon(1e-14));
        CHECK(init.tau == doctest::Approx(1.0 / (s.lead_sq - s.cross * s.cross / s.lag_sq)).epsilon(1e-14));
        // grid search on the (T-1) term: -log tau + tau (Phi - 2 Psi phi + phi^2 Sigma)
        auto g = [&](double phi, double tau) {
            return -std::log(tau) + tau * (s.lead_sq - 2 * s.cross * phi + phi * phi * s.lag_sq);
        };
        const double best = g(init.phi, init.tau);
        for (double dp : {-1e-3, 1e-3})
            for (double dt : {-1e-3, 0.0, 1e-3}) CHECK(g(init.phi + dp, init.tau * (1 + dt)) >= best);
    }
}

TEST_CASE("minimise_saem_objective beats a dense grid") {
    Rng rng(5);
    const auto sim = simulate(VarveModel{}, VarveParams{0.7, 3.0}, 40, rng);
    const auto s = trajectory_statistics(sim.states);
    const auto best = minimise_saem_objective(s, 40);
    const double f_best = saem_objective(best.phi, best.tau, s, 40);
    double f_grid = INFINITY;
    for (int i = 1; i < 400; ++i)
        for (int j = 1; j < 400; ++j) {
            const double phi = -1.0 + 2.0 * i / 400.0;
            const double tau = 0.05 * j;
            f_grid = std::min(f_grid, saem_objective(phi, tau, s, 40));
        }
    CHECK(f_best <= f_grid + 1e-12);
    const double tau_only = minimise_saem_objective_tau(s, 40, 0.7);
    CHECK(saem_objective(0.7, tau_only, s, 40) <= saem_objective(0.7, tau_only * 1.01, s, 40));
    CHECK(saem_objective(0.7, tau_only, s, 40) <= saem_objective(0.7, tau_only * 0.99, s, 40));
}

TEST_CASE("stochastic_update with unit step forgets the past") {
    SufficientStats a{1, 2, 3, 4}, b{5, 6, 7, 8};
    const auto c = stochastic_update(a, b, 1.0);
    CHECK(c.cross == 5);
    CHECK(c.initial_sq == 8);
    const auto d = stochastic_update(a, b, 0.25);
    CHECK(d.lead_sq == doctest::Approx(3.0));
}

TEST_CASE("psem with exact smoothing draws tracks EM in expectation") {
    const LgssParams truth;
    const auto y = lgss_data(80, 21);
    const auto em = em_lgss(truth, y, 2.0, 5, 0.0);
    const std::size_t K = 5, R = 20;
    std::vector<std::vector<double>> runs(K + 1);
    for (std::uint64_t s = 0; s < R; ++s) {
        Rng rng(s);
        TrajectorySampler<LgssParams> sampler = [&](const LgssParams& p, Rng& r) {
            const auto kf = kalman_filter(p, y);
            std::vector<std::vector<double>> out;
            for (int m = 0; m < 200; ++m) out.push_back(backward_sample(p, kf, r));
            return out;
        };
        LgssParams p0 = truth;
        p0.theta = 2.0;
        const auto tr = psem_with_sampler(LgssModel{}, p0, y.size(), K, sampler, rng);
        for (std::size_t k = 0; k <= K; ++k) runs[k].push_back(tr.history[k].theta);
    }
    for (std::size_t k = 1; k <= K; ++k) {
        const double se = std::sqrt(sample_variance(runs[k]) / R);
        CHECK(std::abs(sample_mean(runs[k]) - em.thetas[k]) < 3 * se + 1e-12);
    }
}

TEST_CASE("psem: particle version lands near EM") {
    const auto y = lgss_data(100, 5);
    const auto em = em_lgss(LgssParams{}, y, 1.0, 1000, 1e-10);
    PsemOptions o;
    o.N = 500;
    o.M = 100;
    o.K = 50;
    o.ffbsi.mode = FfbsiMode::rejection;
    Rng rng(13);
    const auto r = psem(LgssModel{}, LgssParams{}, y, o, rng);
    CHECK(std::abs(r.estimate.theta - em.estimate) < 0.1);
    o.K = 0;
    CHECK(psem(LgssModel{}, LgssParams{}, y, o, rng).estimate.theta == 1.0);
}

TEST_CASE("psaem: LGSS with few particles converges near EM") {
    const auto y = lgss_data(100, 77);
    const auto em = em_lgss(LgssParams{}, y, 1.0, 1000, 1e-10);
    PsaemOptions o;
    o.N = 5;
    o.K = 2000;
    Rng rng(8);
    const auto r = psaem(LgssModel{}, LgssParams{}, y, {}, o, rng);
    CHECK(std::abs(r.estimate.theta - em.estimate) < 0.05);
    CHECK(r.history.size() == 2001);
    CHECK(r.stats.size() == 2000);
}

TEST_CASE("psaem and psem on varve data stay in the parameter space") {
    Rng rng(2);
    const auto sim = simulate(VarveModel{}, VarveParams{0.9, 30.0}, 150, rng);
    PsaemOptions o;
    o.N = 10;
    o.K = 300;
    const auto r = psaem(VarveModel{}, VarveParams{0.5, 5.0}, sim.observations, {}, o, rng);
    for (const auto& p : r.history) {
        CHECK(std::abs(p.phi) < 1.0);
        CHECK(p.tau > 0.0);
    }
    CHECK(r.estimate.phi == doctest::Approx(0.9).epsilon(0.15));
}

TEST_CASE("varve gradient ascent from the published starting point") {
    const auto data = ingest_dataset(std::string(SSMID_SOURCE_DIR) + "/data/varve_synthetic.txt");
    const auto y = data.view();
    const VarveModel model;
    Rng rng(1);
    AscentConfig cfg;
    const auto t0 = varve_to_transformed(VarveParams{0.95, 10.0});
    cfg.theta0 = {t0[0], t0[1]};
    cfg.gamma = 0.01;
    cfg.alpha = 2.0 / 3.0;
    cfg.max_iterations = 250;
    cfg.tolerance = 0.0;
    FfbsiOptions fo;
    fo.mode = FfbsiMode::rejection;
    auto provider = [&](std::span<const double> th) {
        const auto p = varve_from_transformed(th[0], th[1]);
        const auto ps = bootstrap_pf(model, p, y, 200, PfOptions{}, rng);
        const auto traj = ffbsi(model, p, ps, 40, fo, rng).trajectories;
        const std::vector<double> w(traj.size(), 1.0 / static_cast<double>(traj.size()));
        return GradientEvaluation{fisher_gradient(model, p, traj, w), estimate_loglik(ps)};
    };
    const auto r = gradient_ascent_ml(provider, cfg);
    CHECK(r.history.size() == 251);
    for (const auto& it : r.history) {
        CHECK(std::isfinite(it.theta[0]));
        CHECK(std::isfinite(it.theta[1]));
    }
    const auto last = varve_from_transformed(r.estimate[0], r.estimate[1]);
    CHECK(last.tau > 10.0);
}
