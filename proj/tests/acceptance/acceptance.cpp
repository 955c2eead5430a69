// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion numbers as
// arguments to run a subset (e.g. `acceptance 3 13`).
#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "ssmid/auxiliary_filter.hpp"
#include "ssmid/dataset.hpp"
#include "ssmid/diagnostics.hpp"
#include "ssmid/em.hpp"
#include "ssmid/gibbs.hpp"
#include "ssmid/gradient_ascent.hpp"
#include "ssmid/harness/config.hpp"
#include "ssmid/harness/experiment.hpp"
#include "ssmid/kalman.hpp"
#include "ssmid/mh.hpp"

using namespace ssmid;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<double> lgss_data(std::size_t T, std::uint64_t seed, double theta = 1.0) {
    LgssParams p;
    p.theta = theta;
    Rng rng(seed);
    return simulate(LgssModel{}, p, T, rng).observations;
}

LgssParams with_theta(double th) {
    LgssParams p;
    p.theta = th;
    return p;
}

double chain_mean(const ParameterChain& c, std::size_t j = 0) { return sample_mean(c.component(j)); }
double chain_se(const ParameterChain& c, std::size_t j = 0) { return mc_standard_error(c.component(j)); }

// ---------------------------------------------------------------------------

Outcome c1_dense_gaussian() {
    const LgssParams p;
    const auto y = lgss_data(10, 101);
    const auto n = static_cast<Eigen::Index>(y.size());
    Eigen::MatrixXd S(n, n);
    for (Eigen::Index s = 0; s < n; ++s)
        for (Eigen::Index t = 0; t < n; ++t)
            S(s, t) = p.c * p.c * std::pow(p.a, std::abs(static_cast<double>(s - t))) / (0.51 * p.theta) +
                      (s == t ? p.r : 0.0);
    const Eigen::Map<const Eigen::VectorXd> yv(y.data(), n);
    const Eigen::LLT<Eigen::MatrixXd> llt(S);
    double logdet = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) logdet += 2.0 * std::log(llt.matrixL()(i, i));
    const double dense = -0.5 * (static_cast<double>(n) * kLogTwoPi + logdet + llt.matrixL().solve(yv).squaredNorm());
    const double diff = std::abs(kalman_filter(p, y).loglik - dense);
    return {diff < 1e-9, fmt("|V_kalman - V_dense| = %.3g", diff)};
}

Outcome c2_gradient() {
    Rng rng(202);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double theta = 0.2 + 4.8 * uniform01(rng);
        const auto y = lgss_data(100, 2000 + static_cast<std::uint64_t>(i), 0.3 + 3.0 * uniform01(rng));
        const double h = 1e-5;
        const double fd =
            (kalman_filter(with_theta(theta + h), y).loglik - kalman_filter(with_theta(theta - h), y).loglik) / (2 * h);
        const double g = kalman_gradient(with_theta(theta), y);
        worst = std::max(worst, std::abs(g - fd) / std::max(std::abs(fd), 1e-12));
    }
    return {worst < 1e-4, fmt("max relative error over 20 pairs = %.3g", worst)};
}

Outcome c3_unbiased() {
    const auto y = lgss_data(25, 303);
    const double V = kalman_filter(LgssParams{}, y).loglik;
    bool ok = true;
    std::string detail;
    for (std::size_t N : {10u, 50u, 200u}) {
        Rng rng(derive_seed(3, "c3", N));
        std::vector<double> ratio;
        for (int r = 0; r < 2000; ++r)
            ratio.push_back(std::exp(bootstrap_loglik(LgssModel{}, LgssParams{}, y, N, PfOptions{}, rng) - V));
        const double m = sample_mean(ratio), se = std::sqrt(sample_variance(ratio) / 2000.0);
        const double z = (m - 1.0) / se;
        ok = ok && std::abs(z) < 3.0;
        detail += fmt("N=%zu: mean ratio %.4f, SE %.4f, z=%.2f; ", N, m, se, z);
    }
    return {ok, detail};
}

Outcome c4_clt_rate() {
    const std::size_t T = 50, R = 1000;
    const auto y = lgss_data(T, 404);
    auto variance_at = [&](std::size_t N) {
        Rng rng(derive_seed(4, "c4", N));
        std::vector<double> est;
        for (std::size_t r = 0; r < R; ++r) {
            const auto ps = bootstrap_pf(LgssModel{}, LgssParams{}, y, N, PfOptions{}, rng);
            est.push_back(filter_expectation(ps, T - 1, [](double x) { return x; }));
        }
        return sample_variance(est);
    };
    const double v1 = variance_at(100), v4 = variance_at(400);
    const double ratio = v1 / v4;
    return {ratio > 2.0 && ratio < 6.0, fmt("Var(N=100)/Var(N=400) = %.3f", ratio)};
}

Outcome c5_do_em() {
    const auto y = lgss_data(100, 505);
    AscentConfig cfg;
    cfg.theta0 = {1.0};
    cfg.gamma = 0.05;
    cfg.max_iterations = 5000;
    cfg.tolerance = 1e-12;
    cfg.backtracking = true;
    cfg.lower = {0.0};
    const auto doml = gradient_ascent_ml(
        [&](std::span<const double> th) { return GradientEvaluation{{kalman_gradient(with_theta(th[0]), y)}, NAN}; },
        cfg, [&](std::span<const double> th) { return kalman_filter(with_theta(th[0]), y).loglik; });
    const auto em = em_lgss(LgssParams{}, y, 1.0, 5000, 1e-12);
    const double d = std::abs(doml.estimate[0] - em.estimate);
    const double g1 = std::abs(kalman_gradient(with_theta(doml.estimate[0]), y));
    const double g2 = std::abs(kalman_gradient(with_theta(em.estimate), y));
    const bool differs = std::abs(em.estimate - 1.0) > 1e-3;
    return {d < 1e-3 && g1 < 1e-6 && g2 < 1e-6 && differs,
            fmt("DO %.6f, EM %.6f, |diff| %.2g, |grad| %.2g / %.2g", doml.estimate[0], em.estimate, d, g1, g2)};
}

const std::vector<double>& example_data() {
    static const auto y = lgss_data(100, 606);
    return y;
}

Outcome c6_mh_gibbs() {
    const auto& y = example_data();
    Rng r1(derive_seed(6, "mh")), r2(derive_seed(6, "gibbs"));
    const auto mh = mh_exact(LgssModel{}, LgssParams{}, y, RandomWalkProposal::scalar(0.1), 1.0, 20000, r1, 10000);
    GibbsOptions o;
    o.burn_in = 10000;
    const auto gb = gibbs_lgss(LgssModel{}, LgssParams{}, y, 1.0, 20000, r2, o);
    const double d = std::abs(chain_mean(mh) - chain_mean(gb.chain));
    const double se = std::hypot(chain_se(mh), chain_se(gb.chain));
    return {d < 3 * se, fmt("MH %.4f, Gibbs %.4f, |diff| %.4f, combined SE %.4f", chain_mean(mh), chain_mean(gb.chain),
                            d, se)};
}

Outcome c7_pmh() {
    const auto& y = example_data();
    Rng r0(derive_seed(7, "mh"));
    const auto mh = mh_exact(LgssModel{}, LgssParams{}, y, RandomWalkProposal::scalar(0.1), 1.0, 20000, r0, 2000);
    Rng r1(derive_seed(7, "pmh100"));
    PmhOptions o;
    o.N = 100;
    o.burn_in = 2000;
    const auto p100 = pmh(LgssModel{}, LgssParams{}, y, RandomWalkProposal::scalar(0.1), {1.0}, 20000, r1, o);
    const double se100 = std::hypot(chain_se(mh), chain_se(p100));
    const double d100 = std::abs(chain_mean(mh) - chain_mean(p100));
    bool ok = d100 < 3 * se100;
    std::string detail = fmt("N=100: PMH %.4f vs MH %.4f, |diff| %.4f, SE %.4f; ", chain_mean(p100), chain_mean(mh),
                             d100, se100);

    // With one particle the likelihood estimate on T = 100 has a log-variance in the hundreds and the
    // chain cannot move, so the single-particle check uses the first 10 observations.
    const std::span<const double> y10(y.data(), 10);
    Rng r2(derive_seed(7, "mh10"));
    const auto mh10 = mh_exact(LgssModel{}, LgssParams{}, y10, RandomWalkProposal::scalar(0.5), 1.0, 100000, r2, 10000);
    Rng r3(derive_seed(7, "pmh1"));
    o.N = 1;
    o.burn_in = 10000;
    const auto p1 = pmh(LgssModel{}, LgssParams{}, y10, RandomWalkProposal::scalar(0.5), {1.0}, 100000, r3, o);
    const double se1 = std::hypot(chain_se(mh10), chain_se(p1));
    const double d1 = std::abs(chain_mean(mh10) - chain_mean(p1));
    ok = ok && d1 < 5 * se1;
    detail += fmt("N=1 (T=10): PMH %.4f vs MH %.4f, |diff| %.4f, SE %.4f, acceptance %.3f", chain_mean(p1),
                  chain_mean(mh10), d1, se1, p1.acceptance_rate());
    return {ok, detail};
}

Outcome c8_pgas() {
    const auto& y = example_data();
    Rng r1(derive_seed(8, "pgas")), r2(derive_seed(8, "gibbs"));
    GibbsOptions o;
    o.burn_in = 2000;
    const auto pg = pgas_gibbs(LgssModel{}, LgssParams{}, y, {}, 5, 20000, r1, o);
    const auto gb = gibbs_lgss(LgssModel{}, LgssParams{}, y, 1.0, 20000, r2, o);
    const double d = std::abs(chain_mean(pg.chain) - chain_mean(gb.chain));
    const double se = std::hypot(chain_se(pg.chain), chain_se(gb.chain));
    bool ok = d < 3 * se;
    std::string detail = fmt("posterior: PGAS %.4f vs Gibbs %.4f, |diff| %.4f, SE %.4f; ", chain_mean(pg.chain),
                             chain_mean(gb.chain), d, se);

    // kernel at fixed theta on a 20-step record
    const std::size_t T = 20;
    const std::span<const double> yk(y.data(), T);
    const auto sm = rts_smoother(LgssParams{}, yk);
    Rng rk(derive_seed(8, "kernel"));
    std::vector<double> x(T, 0.0);
    for (int b = 0; b < 50; ++b) x = pgas_kernel(LgssModel{}, LgssParams{}, yk, 5, x, rk).trajectory;
    std::vector<std::vector<double>> draws(T);
    for (int m = 0; m < 5000; ++m) {
        x = pgas_kernel(LgssModel{}, LgssParams{}, yk, 5, x, rk).trajectory;
        for (std::size_t t = 0; t < T; ++t) draws[t].push_back(x[t]);
    }
    double worst_mean = 0.0, worst_var = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        worst_mean = std::max(worst_mean, std::abs(sample_mean(draws[t]) - sm.mean[t]) / mc_standard_error(draws[t]));
        std::vector<double> sq;
        for (double v : draws[t]) sq.push_back((v - sm.mean[t]) * (v - sm.mean[t]));
        worst_var = std::max(worst_var, std::abs(sample_mean(sq) - sm.var[t]) / mc_standard_error(sq));
    }
    ok = ok && worst_mean < 3.0 && worst_var < 3.0;
    detail += fmt("kernel moments (T=%zu): max |z| mean %.2f, variance %.2f", T, worst_mean, worst_var);
    return {ok, detail};
}

Outcome c9_psaem() {
    const auto& y = example_data();
    const double target = em_lgss(LgssParams{}, y, 1.0, 5000, 1e-12).estimate;
    int hits = 0;
    std::string est;
    for (std::uint64_t s = 0; s < 10; ++s) {
        Rng rng(derive_seed(9, "psaem", s));
        PsaemOptions o;
        o.N = 5;
        o.K = 2000;
        const double th = psaem(LgssModel{}, LgssParams{}, y, {}, o, rng).estimate.theta;
        hits += std::abs(th - target) < 0.05 ? 1 : 0;
        est += fmt("%.3f ", th);
    }
    return {hits >= 8, fmt("EM %.4f; %d/10 within 0.05: %s", target, hits, est.c_str())};
}

Outcome c10_ffbsi() {
    const std::size_t T = 100, R = 50;
    const auto y = lgss_data(T, 1010);
    const auto sm = rts_smoother(LgssParams{}, y);
    FfbsiOptions fo;
    fo.mode = FfbsiMode::rejection;
    std::vector<std::vector<double>> curves;
    for (std::size_t r = 0; r < R; ++r) {
        Rng rng(derive_seed(10, "ffbsi", r));
        const auto ps = bootstrap_pf(LgssModel{}, LgssParams{}, y, 500, PfOptions{}, rng);
        const auto tr = ffbsi(LgssModel{}, LgssParams{}, ps, 100, fo, rng).trajectories;
        std::vector<double> curve(T, 0.0);
        for (const auto& x : tr)
            for (std::size_t t = 0; t < T; ++t) curve[t] += x[t] / 100.0;
        curves.push_back(std::move(curve));
    }
    // The curve under test is the first run; its standard error at each t is the spread of the
    // curve across the R independent replicates.
    double worst = 0.0;
    std::size_t outside = 0;
    for (std::size_t t = 0; t < T; ++t) {
        std::vector<double> v;
        for (const auto& c : curves) v.push_back(c[t]);
        const double z = std::abs(curves[0][t] - sm.mean[t]) / std::sqrt(sample_variance(v));
        worst = std::max(worst, z);
        outside += z > 3.0 ? 1 : 0;
    }
    return {outside == 0, fmt("max |z| over %zu steps = %.2f, %zu outside 3 SE", T, worst, outside)};
}

Outcome c11_varve() {
    const fs::path real = fs::path(SSMID_SOURCE_DIR) / "data" / "varve.txt";
    const bool have_real = fs::exists(real);
    const auto data = ingest_dataset(have_real ? real : fs::path(SSMID_SOURCE_DIR) / "data" / "varve_synthetic.txt");
    const auto y = data.view();
    const VarveModel model;

    Eigen::MatrixXd S(2, 2);
    S << 22.51e-5, -4.53e-5, -4.53e-5, 2.57e-5;
    const RandomWalkProposal prop(S, 2.562 * 2.562 / 2.0);
    PmhOptions po;
    po.N = 1000;
    po.burn_in = 2000;
    po.space = varve_variance_space();
    Rng r1(derive_seed(11, "pmh"));
    const auto pm = pmh(model, VarveParams{}, y, prop, {0.95, 50.0}, 15000, r1, po);

    Rng r2(derive_seed(11, "pgas"));
    GibbsOptions go;
    go.burn_in = 2000;
    const auto pg = pgas_gibbs(model, VarveParams{0.95, 50.0}, y, {}, 20, 15000, r2, go);

    const double pm_phi = chain_mean(pm, 0), pm_tau = chain_mean(pm, 1);
    const double pg_phi = chain_mean(pg.chain, 0), pg_tau = chain_mean(pg.chain, 1);
    std::string detail = fmt("%s data (T=%zu); PMH {%.4f, %.2f} acc %.3f; PGAS {%.4f, %.2f}; ",
                             have_real ? "real" : "synthetic", data.size(), pm_phi, pm_tau, pm.acceptance_rate(), pg_phi,
                             pg_tau);
    if (have_real) {
        const bool ok = std::abs(pm_phi - 0.95) < 0.01 && std::abs(pm_tau - 51.05) < 5 &&
                        std::abs(pg_phi - 0.953) < 0.01 && std::abs(pg_tau - 44.37) < 5;
        return {ok, detail + "reference values {0.95, 51.05} and {0.953, 44.37}"};
    }
    const double se_phi = std::hypot(chain_se(pm, 0), chain_se(pg.chain, 0));
    const double se_tau = std::hypot(chain_se(pm, 1), chain_se(pg.chain, 1));
    const double z_phi = std::abs(pm_phi - pg_phi) / se_phi, z_tau = std::abs(pm_tau - pg_tau) / se_tau;
    detail += fmt("cross-agreement z: phi %.2f (SE %.4f), tau %.2f (SE %.3f)", z_phi, se_phi, z_tau, se_tau);
    return {z_phi < 3 && z_tau < 3, detail};
}

Outcome c12_rejection_sampler() {
    Rng sim_rng(1212);
    const auto x = simulate(VarveModel{}, VarveParams{0.9, 20.0}, 50, sim_rng).states;
    const double a = 0.01, b = 0.01;
    const auto c = varve_conditional_constants(x, a, b);

    // fixed box from the proposal's quantiles; the test is on the distribution conditional on the box
    boost::math::gamma_distribution<double> tau_prop(c.shape, 1.0 / c.rate);
    const double tau_lo = boost::math::quantile(tau_prop, 1e-4), tau_hi = boost::math::quantile(tau_prop, 1 - 1e-4);
    const double half = 5.0 / std::sqrt(tau_lo * c.precision);
    const double phi_lo = std::max(-1.0, c.mean - half), phi_hi = std::min(1.0, c.mean + half);
    const int B = 12, sub = 40;
    const double dphi = (phi_hi - phi_lo) / B, dtau = (tau_hi - tau_lo) / B;

    std::vector<double> prob(B * B, 0.0);
    double peak = -INFINITY;
    for (int i = 0; i < B * sub; ++i)
        for (int j = 0; j < B * sub; ++j)
            peak = std::max(peak, varve_conditional_log_target(phi_lo + (i + 0.5) * dphi / sub,
                                                               tau_lo + (j + 0.5) * dtau / sub, x, a, b));
    for (int i = 0; i < B * sub; ++i)
        for (int j = 0; j < B * sub; ++j) {
            const double lt = varve_conditional_log_target(phi_lo + (i + 0.5) * dphi / sub,
                                                           tau_lo + (j + 0.5) * dtau / sub, x, a, b);
            prob[(i / sub) * B + j / sub] += std::exp(lt - peak);
        }
    double total = 0.0;
    for (double p : prob) total += p;
    for (double& p : prob) p /= total;

    Rng rng(derive_seed(12, "draws"));
    std::vector<double> counts(B * B, 0.0);
    std::size_t inside = 0;
    for (int n = 0; n < 100000; ++n) {
        const auto d = sample_varve_conditional(x, a, b, rng).params;
        const int i = static_cast<int>(std::floor((d.phi - phi_lo) / dphi));
        const int j = static_cast<int>(std::floor((d.tau - tau_lo) / dtau));
        if (i < 0 || i >= B || j < 0 || j >= B) continue;
        counts[i * B + j] += 1.0;
        ++inside;
    }
    // pool sparse cells
    double stat = 0.0, pooled_e = 0.0, pooled_o = 0.0;
    int cells = 0;
    for (int k = 0; k < B * B; ++k) {
        const double e = prob[k] * static_cast<double>(inside);
        if (e < 5.0) {
            pooled_e += e;
            pooled_o += counts[k];
            continue;
        }
        stat += (counts[k] - e) * (counts[k] - e) / e;
        ++cells;
    }
    if (pooled_e > 0.0) {
        stat += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
        ++cells;
    }
    const double pval = boost::math::cdf(boost::math::complement(boost::math::chi_squared(cells - 1), stat));
    return {pval > 0.001, fmt("chi-square %.1f on %d cells, p = %.4f (%zu of 100000 draws in the box)", stat, cells - 1,
                              pval, inside)};
}

Outcome c13_apf_weights() {
    const std::size_t N = 8, T = 5, R = 10000;
    const auto y = lgss_data(T, 1313);
    const auto q = lgss_inflated_proposal(2.0);
    // Z_hat * sum_i w_T^i x_T^i has expectation p(y) E[x_T | y] under any valid weighting
    const double Z = std::exp(kalman_filter(LgssParams{}, y).loglik);
    auto run = [&](ApfWeighting w, const char* tag) {
        std::vector<double> est, norm;
        for (std::size_t r = 0; r < R; ++r) {
            Rng rng(derive_seed(13, tag, r));
            const auto ps = auxiliary_pf(LgssModel{}, LgssParams{}, y, N, q, w, rng);
            const double m = filter_expectation(ps, T - 1, [](double v) { return v; });
            est.push_back(std::exp(estimate_loglik(ps)) / Z * m);
            norm.push_back(m);
        }
        return std::pair{est, norm};
    };
    const auto [aux, aux_norm] = run(ApfWeighting::auxiliary, "aux");
    const auto [mar, mar_norm] = run(ApfWeighting::marginal, "marginal");
    const double d = std::abs(sample_mean(aux) - sample_mean(mar));
    const double se = std::sqrt((sample_variance(aux) + sample_variance(mar)) / static_cast<double>(R));
    const double kalman_mean = kalman_filter(LgssParams{}, y).filtered_mean[T - 1];
    return {d < 3 * se,
            fmt("unnormalised: aux %.4f, marginal %.4f, |diff| %.4f, SE %.4f (Kalman %.4f); normalised means %.4f / %.4f",
                sample_mean(aux), sample_mean(mar), d, se, kalman_mean, sample_mean(aux_norm), sample_mean(mar_norm))};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome c14_determinism() {
    const fs::path dir = fs::temp_directory_path() / "ssmid_acceptance_determinism";
    fs::remove_all(dir);
    const auto j = nlohmann::json::parse(R"({
        "version": 1, "model": {"id": "varve"}, "data": {"simulate": {"T": 100, "seed": 14}},
        "algorithm": {"id": "pmh", "N": 100, "M": 400, "burn_in": 100, "pilot": {"M": 200, "burn_in": 50}},
        "seed": 1414, "chains": 2})");
    auto cfg = harness::parse_config(j);
    cfg.output_dir = (dir / "run").string();
    const auto first = harness::run_experiment(cfg);
    std::vector<std::pair<std::string, std::string>> saved;
    for (const auto& f : first.files) saved.emplace_back(f, slurp(f));
    fs::remove_all(dir / "run");
    const auto second = harness::run_experiment(cfg);
    bool same = first.files == second.files;
    std::size_t differing = 0;
    for (const auto& [f, content] : saved)
        if (slurp(f) != content) ++differing;
    same = same && differing == 0;
    return {same, fmt("%zu files compared, %zu differ", saved.size(), differing)};
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> all = {
        {1, "Kalman log-likelihood vs dense Gaussian", 1, c1_dense_gaussian},
        {2, "sensitivity gradient vs finite differences", 5, c2_gradient},
        {3, "particle likelihood unbiasedness", 120, c3_unbiased},
        {4, "Monte Carlo rate N vs 4N", 120, c4_clt_rate},
        {5, "direct optimisation vs EM", 30, c5_do_em},
        {6, "MH vs Gibbs posterior", 120, c6_mh_gibbs},
        {7, "PMH exactness (N=100, N=1)", 300, c7_pmh},
        {8, "PGAS exactness", 300, c8_pgas},
        {9, "PSAEM convergence", 300, c9_psaem},
        {10, "FFBSi smoothed mean", 60, c10_ffbsi},
        {11, "varve posterior", 1800, c11_varve},
        {12, "varve rejection sampler", 60, c12_rejection_sampler},
        {13, "marginal vs auxiliary weights", 120, c13_apf_weights},
        {14, "determinism", 10, c14_determinism},
    };
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

    int failures = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s criterion %d (%s): %s [%.1fs of %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
