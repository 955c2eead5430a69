#include "ssmid/harness/experiment.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <thread>

#include "ssmid/diagnostics.hpp"
#include "ssmid/em.hpp"
#include "ssmid/errors.hpp"
#include "ssmid/gibbs.hpp"
#include "ssmid/gradient_ascent.hpp"
#include "ssmid/harness/io.hpp"
#include "ssmid/kalman.hpp"
#include "ssmid/mh.hpp"

namespace ssmid::harness {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

PfOptions pf_options(const AlgorithmSettings& s) {
    PfOptions o;
    o.scheme = parse_resampling_scheme(s.resampling);
    o.adaptive = s.adaptive;
    o.ess_fraction = s.ess_fraction;
    return o;
}

FfbsiOptions ffbsi_options(const AlgorithmSettings& s) {
    FfbsiOptions o;
    o.mode = s.ffbsi_mode == "rejection" ? FfbsiMode::rejection : FfbsiMode::exhaustive;
    o.max_attempts = s.ffbsi_attempts;
    return o;
}

Eigen::MatrixXd to_matrix(const std::vector<std::vector<double>>& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

ProposalSpace proposal_space(const ProposalConfig& p) {
    return p.space == "phi_variance" ? varve_variance_space() : ProposalSpace{};
}

// Output sink for one run; file names get a "_<r>" suffix when several runs share a directory.
struct RunContext {
    const ExperimentConfig& config;
    const LoadedData& data;
    std::size_t index;
    fs::path dir;
    std::string suffix;
    std::vector<std::string> files;

    fs::path file(const std::string& stem, const std::string& ext = ".csv") {
        fs::path p = dir / (stem + suffix + ext);
        files.push_back(p.string());
        return p;
    }
    Rng stream(const std::string& component) const { return make_stream(config.seed, component, index); }
};

json chain_outputs(RunContext& ctx, const ParameterChain& chain) {
    write_chain_csv(ctx.file("chain"), chain);
    for (std::size_t j = 0; j < chain.dim(); ++j) {
        const auto values = chain.component(j);
        write_histogram_csv(ctx.file("hist_" + chain.names[j]), make_histogram(values, ctx.config.settings.hist_bins));
    }
    return summarise_chain(chain);
}

json estimate_json(const std::vector<std::string>& names, const std::vector<double>& v) {
    json j = json::object();
    for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = v[i];
    return j;
}

template <ParameterisedModel M>
std::vector<double> initial_vector(const M& model, const typename M::Params& params, const AlgorithmSettings& s) {
    return s.theta0.empty() ? model.to_vector(params) : s.theta0;
}

template <ParameterisedModel M>
typename M::Params initial_params(const M& model, const typename M::Params& params, const AlgorithmSettings& s) {
    auto p = model.from_vector(initial_vector(model, params, s), params);
    model.validate(p);
    return p;
}

// ---- optimisation -------------------------------------------------------

template <ParameterisedModel M>
json run_do_ml(RunContext& ctx, const M& model, const typename M::Params& base) {
    const auto& s = ctx.config.settings;
    const auto y = ctx.data.data.view();
    Rng rng = ctx.stream("do-ml");
    AscentConfig cfg;
    cfg.gamma = s.gamma;
    cfg.alpha = s.alpha;
    cfg.max_iterations = s.K;
    cfg.tolerance = s.tolerance;
    cfg.backtracking = s.backtracking;
    const auto p0 = initial_params(model, base, s);

    // Transformed varve coordinates map (atanh phi, log tau) to the model parameters.
    constexpr bool is_varve = std::is_same_v<M, VarveModel>;
    const bool transformed = is_varve && s.coordinates == "transformed";
    auto to_params = [&](std::span<const double> th) {
        if constexpr (is_varve) {
            if (transformed) return varve_from_transformed(th[0], th[1]);
        }
        return model.from_vector(th, base);
    };
    if constexpr (is_varve) {
        if (transformed) {
            const auto t = varve_to_transformed(p0);
            cfg.theta0 = {t[0], t[1]};
        } else {
            cfg.theta0 = model.to_vector(p0);
            cfg.lower = {-1.0, 0.0};
            cfg.upper = {1.0, INFINITY};
        }
    } else {
        cfg.theta0 = model.to_vector(p0);
        cfg.lower = {0.0};
    }

    GradientProvider provider;
    ObjectiveFunction objective;
    const bool exact = !is_varve && s.gradient == "exact";
    if constexpr (!is_varve) {
        if (exact) {
            provider = [&](std::span<const double> th) {
                const auto p = to_params(th);
                return GradientEvaluation{{kalman_gradient(p, y)}, NAN};
            };
            objective = [&](std::span<const double> th) { return kalman_filter(to_params(th), y).loglik; };
        }
    }
    if (!exact) {
        provider = [&](std::span<const double> th) {
            const auto p = to_params(th);
            const auto ps = bootstrap_pf(model, p, y, s.N, pf_options(s), rng);
            const auto traj = ffbsi(model, p, ps, s.M, ffbsi_options(s), rng).trajectories;
            const std::vector<double> w(traj.size(), 1.0 / static_cast<double>(traj.size()));
            GradientEvaluation ev;
            if constexpr (is_varve) {
                ev.gradient = fisher_gradient(model, p, traj, w,
                                              transformed ? VarveCoordinates::transformed : VarveCoordinates::raw);
            } else {
                ev.gradient = fisher_gradient(model, p, traj, w);
            }
            ev.objective = estimate_loglik(ps);
            return ev;
        };
    }
    const auto res = gradient_ascent_ml(provider, cfg, objective);

    std::vector<std::vector<double>> params;
    std::vector<double> obj, step;
    for (const auto& it : res.history) {
        params.push_back(model.to_vector(to_params(it.theta)));
        obj.push_back(it.objective);
        step.push_back(it.step_size);
    }
    write_iterates_csv(ctx.file("iterates"), model.parameter_names(), params, obj, step);
    json out;
    out["estimate"] = estimate_json(model.parameter_names(), params.back());
    out["iterations"] = res.history.size() - 1;
    out["converged"] = res.converged;
    out["warnings"] = res.warnings;
    out["final_objective"] = finite_or_null(obj.back());
    return out;
}

json run_em(RunContext& ctx, const LgssModel&, const LgssParams& base) {
    const auto& s = ctx.config.settings;
    const double theta0 = s.theta0.empty() ? base.theta : s.theta0[0];
    const auto res = em_lgss(base, ctx.data.data.view(), theta0, s.K, s.tolerance);
    std::vector<std::vector<double>> params;
    for (double t : res.thetas) params.push_back({t});
    write_iterates_csv(ctx.file("iterates"), {"theta"}, params, res.logliks, std::vector<double>(params.size(), NAN));
    json out;
    out["estimate"] = {{"theta", res.estimate}};
    out["iterations"] = res.thetas.size() - 1;
    out["converged"] = res.converged;
    out["final_objective"] = res.logliks.back();
    return out;
}

template <ParameterisedModel M>
std::vector<double> exact_objective_track(const M&, const typename M::Params&, std::span<const double>,
                                          const std::vector<typename M::Params>& history) {
    return std::vector<double>(history.size(), NAN);
}

std::vector<double> exact_objective_track(const LgssModel&, const LgssParams&, std::span<const double> y,
                                          const std::vector<LgssParams>& history) {
    std::vector<double> v;
    for (const auto& p : history) v.push_back(kalman_filter(p, y).loglik);
    return v;
}

template <ParameterisedModel M>
json run_psem(RunContext& ctx, const M& model, const typename M::Params& base) {
    const auto& s = ctx.config.settings;
    Rng rng = ctx.stream("psem");
    PsemOptions o;
    o.N = s.N;
    o.M = s.M;
    o.K = s.K;
    o.pf = pf_options(s);
    o.ffbsi = ffbsi_options(s);
    o.tolerance = s.tolerance;
    const auto res = psem(model, initial_params(model, base, s), ctx.data.data.view(), o, rng);
    std::vector<std::vector<double>> params;
    for (const auto& p : res.history) params.push_back(model.to_vector(p));
    const auto obj = exact_objective_track(model, base, ctx.data.data.view(), res.history);
    write_iterates_csv(ctx.file("iterates"), model.parameter_names(), params, obj,
                       std::vector<double>(params.size(), NAN));
    json out;
    out["estimate"] = estimate_json(model.parameter_names(), params.back());
    out["iterations"] = res.history.size() - 1;
    out["converged"] = res.converged;
    return out;
}

template <ParameterisedModel M>
json run_psaem(RunContext& ctx, const M& model, const typename M::Params& base) {
    const auto& s = ctx.config.settings;
    Rng rng = ctx.stream("psaem");
    PsaemOptions o;
    o.N = s.N;
    o.K = s.K;
    const double expo = s.step_exponent;
    o.step = [expo](std::size_t k) { return std::pow(static_cast<double>(k), -expo); };
    const auto res = psaem(model, initial_params(model, base, s), ctx.data.data.view(), {}, o, rng);
    std::vector<std::vector<double>> params;
    std::vector<double> steps;
    for (std::size_t k = 0; k < res.history.size(); ++k) {
        params.push_back(model.to_vector(res.history[k]));
        steps.push_back(k == 0 ? NAN : o.step(k));
    }
    const auto obj = exact_objective_track(model, base, ctx.data.data.view(), res.history);
    write_iterates_csv(ctx.file("iterates"), model.parameter_names(), params, obj, steps);
    std::vector<std::vector<double>> cols(4);
    for (const auto& st : res.stats) {
        cols[0].push_back(st.cross);
        cols[1].push_back(st.lead_sq);
        cols[2].push_back(st.lag_sq);
        cols[3].push_back(st.initial_sq);
    }
    write_table_csv(ctx.file("statistics"), {"psi", "phi", "sigma", "x1sq"}, cols);
    json out;
    out["estimate"] = estimate_json(model.parameter_names(), params.back());
    out["iterations"] = res.history.size() - 1;
    return out;
}

// ---- samplers -----------------------------------------------------------

json run_mh(RunContext& ctx, const LgssModel& model, const LgssParams& base) {
    const auto& s = ctx.config.settings;
    Rng rng = ctx.stream("mh");
    const RandomWalkProposal prop(to_matrix(s.proposal.covariance), s.proposal.scale);
    const double theta0 = s.theta0.empty() ? base.theta : s.theta0[0];
    const auto chain = mh_exact(model, base, ctx.data.data.view(), prop, theta0, s.M, rng, s.burn_in);
    return chain_outputs(ctx, chain);
}

template <ParameterisedModel M>
json run_pmh(RunContext& ctx, const M& model, const typename M::Params& base) {
    const auto& s = ctx.config.settings;
    const auto y = ctx.data.data.view();
    std::vector<double> theta0 = initial_vector(model, base, s);
    RandomWalkProposal prop(to_matrix(s.proposal.covariance), s.proposal.scale);
    PmhOptions o;
    o.N = s.N;
    o.pf = pf_options(s);
    o.burn_in = s.burn_in;
    o.space = proposal_space(s.proposal);
    json out;
    if (s.pilot.enabled) {
        // The pilot's sample covariance (in the main proposal's coordinates) seeds the main proposal,
        // and the main chain starts where the pilot stopped.
        Rng prng = ctx.stream("pmh-pilot");
        PmhOptions po = o;
        po.burn_in = s.pilot.burn_in;
        po.space = proposal_space(s.pilot.proposal);
        const RandomWalkProposal pprop(to_matrix(s.pilot.proposal.covariance), s.pilot.proposal.scale);
        auto pilot = pmh(model, base, y, pprop, theta0, s.pilot.M - 1, prng, po);
        if (!o.space.is_identity())
            for (auto& d : pilot.draws) d = o.space.to_proposal(d);
        prop = RandomWalkProposal(chain_covariance(pilot), s.pilot.scale);
        theta0 = model.to_vector(model.from_vector(
            o.space.is_identity() ? pilot.draws.back() : o.space.from_proposal(pilot.draws.back()), base));
        std::vector<std::vector<double>> cov(prop.dim(), std::vector<double>(prop.dim()));
        for (std::size_t i = 0; i < prop.dim(); ++i)
            for (std::size_t j = 0; j < prop.dim(); ++j)
                cov[i][j] = prop.covariance()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        out["pilot_covariance"] = cov;
        out["pilot_acceptance_rate"] = pilot.acceptance_rate();
    }
    Rng rng = ctx.stream("pmh");
    const auto chain = pmh(model, base, y, prop, theta0, s.M, rng, o);
    json summary = chain_outputs(ctx, chain);
    for (auto& [k, v] : out.items()) summary[k] = v;
    return summary;
}

json run_gibbs(RunContext& ctx, const LgssModel& model, const LgssParams& base) {
    const auto& s = ctx.config.settings;
    Rng rng = ctx.stream("gibbs");
    GibbsOptions o;
    o.burn_in = s.burn_in;
    const double theta0 = s.theta0.empty() ? base.theta : s.theta0[0];
    const auto res = gibbs_lgss(model, base, ctx.data.data.view(), theta0, s.M, rng, o);
    return chain_outputs(ctx, res.chain);
}

template <ParameterisedModel M>
json run_pgas_gibbs(RunContext& ctx, const M& model, const typename M::Params& base) {
    const auto& s = ctx.config.settings;
    Rng rng = ctx.stream("pgas-gibbs");
    GibbsOptions o;
    o.burn_in = s.burn_in;
    const auto res = pgas_gibbs(model, initial_params(model, base, s), ctx.data.data.view(), {}, s.N, s.M, rng, o);
    return chain_outputs(ctx, res.chain);
}

// ---- filtering / smoothing ----------------------------------------------

template <ParameterisedModel M>
json run_pf_only(RunContext& ctx, const M& model, const typename M::Params& base) {
    const auto& s = ctx.config.settings;
    const auto y = ctx.data.data.view();
    Rng rng = ctx.stream("pf-only");
    const auto p = initial_params(model, base, s);
    const auto ps = bootstrap_pf(model, p, y, s.N, pf_options(s), rng);
    const std::size_t T = ps.length();
    std::vector<std::vector<double>> cols(6);
    double min_ess = INFINITY, sum_ess = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        const double m = filter_expectation(ps, t, [](double x) { return x; });
        const double m2 = filter_expectation(ps, t, [](double x) { return x * x; });
        const double ess = weight_ess(ps.weights[t]);
        min_ess = std::min(min_ess, ess);
        sum_ess += ess;
        cols[0].push_back(static_cast<double>(t + 1));
        cols[1].push_back(y[t]);
        cols[2].push_back(m);
        cols[3].push_back(std::max(0.0, m2 - m * m));
        cols[4].push_back(ess);
        cols[5].push_back(ps.loglik_increments[t]);
    }
    write_table_csv(ctx.file("filter"), {"t", "y", "mean", "var", "ess", "loglik_increment"}, cols);
    if (s.trace) write_trace_csv(ctx.file("trace"), ps);
    json out;
    out["loglik"] = estimate_loglik(ps);
    out["ess_min"] = min_ess;
    out["ess_mean"] = sum_ess / static_cast<double>(T);
    if constexpr (std::is_same_v<M, LgssModel>) out["kalman_loglik"] = kalman_filter(p, y).loglik;
    return out;
}

template <ParameterisedModel M>
json run_smooth_only(RunContext& ctx, const M& model, const typename M::Params& base) {
    const auto& s = ctx.config.settings;
    const auto y = ctx.data.data.view();
    Rng rng = ctx.stream("smooth-only");
    const auto p = initial_params(model, base, s);
    const auto ps = bootstrap_pf(model, p, y, s.N, pf_options(s), rng);
    const auto res = ffbsi(model, p, ps, s.M, ffbsi_options(s), rng);
    const std::size_t T = ps.length();
    std::vector<std::string> header = {"t", "mean", "var"};
    std::vector<std::vector<double>> cols(3);
    for (std::size_t t = 0; t < T; ++t) {
        std::vector<double> xs;
        for (const auto& tr : res.trajectories) xs.push_back(tr[t]);
        cols[0].push_back(static_cast<double>(t + 1));
        cols[1].push_back(sample_mean(xs));
        cols[2].push_back(xs.size() > 1 ? sample_variance(xs) : 0.0);
    }
    if constexpr (std::is_same_v<M, LgssModel>) {
        const auto sm = rts_smoother(p, y);
        header.insert(header.end(), {"rts_mean", "rts_var"});
        cols.push_back(sm.mean);
        cols.push_back(sm.var);
    }
    write_table_csv(ctx.file("smoother"), header, cols);
    json out;
    out["trajectories"] = res.trajectories.size();
    out["rejection_fallbacks"] = res.fallbacks;
    out["loglik"] = estimate_loglik(ps);
    return out;
}

template <ParameterisedModel M>
json dispatch(RunContext& ctx, const M& model, const typename M::Params& params) {
    const std::string& a = ctx.config.algorithm;
    if (a == "do-ml") return run_do_ml(ctx, model, params);
    if (a == "psem") return run_psem(ctx, model, params);
    if (a == "psaem") return run_psaem(ctx, model, params);
    if (a == "pmh") return run_pmh(ctx, model, params);
    if (a == "pgas-gibbs") return run_pgas_gibbs(ctx, model, params);
    if (a == "pf-only") return run_pf_only(ctx, model, params);
    if (a == "smooth-only") return run_smooth_only(ctx, model, params);
    if constexpr (std::is_same_v<M, LgssModel>) {
        if (a == "em") return run_em(ctx, model, params);
        if (a == "mh") return run_mh(ctx, model, params);
        if (a == "gibbs") return run_gibbs(ctx, model, params);
    }
    throw ConfigError("algorithm '" + a + "' is not available for model " + model_name(ctx.config.model));
}

json run_one(RunContext& ctx) {
    const auto& c = ctx.config;
    if (c.model == ModelId::lgss) return dispatch(ctx, LgssModel(c.prior_shape, c.prior_rate), c.lgss);
    return dispatch(ctx, VarveModel(c.prior_shape, c.prior_rate), c.varve);
}

}  // namespace

LoadedData load_data(const ExperimentConfig& c) {
    LoadedData out;
    if (!c.simulate) {
        out.data = ingest_dataset(c.data_file);
        return out;
    }
    Rng rng(c.sim_seed ? *c.sim_seed : derive_seed(c.seed, "data", 0));
    Simulation sim;
    if (c.model == ModelId::lgss)
        sim = simulate(LgssModel(c.prior_shape, c.prior_rate), c.sim_lgss.value_or(c.lgss), c.sim_T, rng);
    else
        sim = simulate(VarveModel(c.prior_shape, c.prior_rate), c.sim_varve.value_or(c.varve), c.sim_T, rng);
    out.data.y = std::move(sim.observations);
    out.data.label = "simulated " + model_name(c.model);
    out.states = std::move(sim.states);
    return out;
}

json summarise_draws(const std::vector<std::string>& names, const std::vector<std::vector<double>>& draws,
                     const std::vector<std::uint8_t>& accepted, std::size_t burn_in) {
    json out;
    const std::size_t start = std::min(burn_in, draws.size());
    out["burn_in"] = burn_in;
    out["draws"] = draws.size();
    out["post_burn_in"] = draws.size() - start;
    std::size_t acc = 0;
    for (std::size_t m = 1; m < accepted.size(); ++m) acc += accepted[m];
    out["acceptance_rate"] = accepted.size() > 1 ? static_cast<double>(acc) / static_cast<double>(accepted.size() - 1)
                                                 : 0.0;
    json means = json::object(), sds = json::object(), iact = json::object(), ess = json::object(),
         se = json::object();
    for (std::size_t j = 0; j < names.size(); ++j) {
        std::vector<double> v;
        for (std::size_t m = start; m < draws.size(); ++m) v.push_back(draws[m][j]);
        const double tau = chain_iact(v);
        means[names[j]] = finite_or_null(sample_mean(v));
        sds[names[j]] = finite_or_null(std::sqrt(sample_variance(v)));
        iact[names[j]] = finite_or_null(tau);
        ess[names[j]] = std::isfinite(tau) ? json(static_cast<double>(v.size()) / tau) : json(0.0);
        se[names[j]] = finite_or_null(mc_standard_error(v));
    }
    out["means"] = means;
    out["sds"] = sds;
    out["iact"] = iact;
    out["ess"] = ess;
    out["mc_se"] = se;
    return out;
}

json summarise_chain(const ParameterChain& chain) {
    json out = summarise_draws(chain.names, chain.draws, chain.accepted, chain.burn_in);
    out["degenerate_proposals"] = chain.degenerate_proposals;
    return out;
}

RunReport run_experiment(const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.config_echo = to_json(config);
    const LoadedData data = load_data(config);

    const fs::path dir = config.output_dir;
    fs::create_directories(dir);
    {
        std::ofstream cfg(dir / "config.json", std::ios::binary);
        cfg << report.config_echo.dump(2) << '\n';
        report.files.push_back((dir / "config.json").string());
    }
    if (!data.states.empty() || config.simulate) {
        std::vector<double> t;
        for (std::size_t i = 0; i < data.data.size(); ++i) t.push_back(static_cast<double>(i + 1));
        write_table_csv(dir / "data.csv", {"t", "y", "x"}, {t, data.data.y, data.states});
        report.files.push_back((dir / "data.csv").string());
    }

    const std::size_t R = config.chains;
    std::vector<RunContext> contexts;
    contexts.reserve(R);
    for (std::size_t r = 0; r < R; ++r)
        contexts.push_back(RunContext{config, data, r, dir, R > 1 ? "_" + std::to_string(r) : "", {}});
    std::vector<json> results(R);
    std::vector<std::exception_ptr> errors(R);
    auto work = [&](std::size_t r) {
        try {
            results[r] = run_one(contexts[r]);
        } catch (...) {
            errors[r] = std::current_exception();
        }
    };
    if (R == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t r = 0; r < R; ++r) threads.emplace_back(work, r);
        for (auto& th : threads) th.join();
    }
    for (std::size_t r = 0; r < R; ++r) {
        if (!errors[r]) continue;
        try {
            std::rethrow_exception(errors[r]);
        } catch (const std::exception& e) {
            throw std::runtime_error("run " + std::to_string(r) + " (" + config.algorithm + " on " +
                                     model_name(config.model) + "): " + e.what());
        }
    }

    json summary;
    summary["algorithm"] = config.algorithm;
    summary["model"] = model_name(config.model);
    summary["data"] = {{"label", data.data.label}, {"T", data.data.size()}};
    if (R == 1) {
        for (auto& [k, v] : results[0].items()) summary[k] = v;
    } else {
        summary["runs"] = results;
        const bool is_chain = config.algorithm == "mh" || config.algorithm == "pmh" || config.algorithm == "gibbs" ||
                              config.algorithm == "pgas-gibbs";
        if (is_chain) {
            // pooled post-burn-in summary across chains
            std::vector<std::string> names;
            std::vector<std::vector<double>> pooled;
            for (const auto& ctx : contexts) {
                const auto t = read_chain_csv(dir / ("chain" + ctx.suffix + ".csv"));
                names = t.names;
                for (std::size_t m = std::min(config.settings.burn_in, t.draws.size()); m < t.draws.size(); ++m)
                    pooled.push_back(t.draws[m]);
            }
            json pooled_summary = json::object();
            for (std::size_t j = 0; j < names.size(); ++j) {
                std::vector<double> v;
                for (const auto& row : pooled) v.push_back(row[j]);
                pooled_summary["means"][names[j]] = finite_or_null(sample_mean(v));
                pooled_summary["sds"][names[j]] = finite_or_null(std::sqrt(sample_variance(v)));
            }
            summary["pooled"] = pooled_summary;
        }
    }
    for (const auto& ctx : contexts) report.files.insert(report.files.end(), ctx.files.begin(), ctx.files.end());
    {
        std::ofstream out(dir / "summary.json", std::ios::binary);
        out << summary.dump(2) << '\n';
        report.files.push_back((dir / "summary.json").string());
    }
    report.summary = summary;
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ssmid::harness
