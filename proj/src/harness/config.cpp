#include "ssmid/harness/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "ssmid/errors.hpp"
#include "ssmid/resampling.hpp"

namespace ssmid::harness {

using nlohmann::json;

namespace {

struct AlgorithmSchema {
    std::set<std::string> allowed;
    std::set<std::string> required;
    bool lgss_only = false;
};

const std::map<std::string, AlgorithmSchema>& schemas() {
    static const std::map<std::string, AlgorithmSchema> s = {
        {"do-ml",
         {{"gamma", "alpha", "K", "tolerance", "backtracking", "gradient", "coordinates", "N", "M", "ffbsi_mode",
           "ffbsi_attempts", "resampling"},
          {"K"},
          false}},
        {"em", {{"K", "tolerance"}, {"K"}, true}},
        {"psem", {{"N", "M", "K", "tolerance", "ffbsi_mode", "ffbsi_attempts", "resampling"}, {"N", "M", "K"}, false}},
        {"psaem", {{"N", "K", "step_exponent"}, {"N", "K"}, false}},
        {"mh", {{"M", "burn_in", "proposal"}, {"M"}, true}},
        {"pmh", {{"N", "M", "burn_in", "proposal", "pilot", "resampling", "adaptive", "ess_fraction"}, {"N", "M"}, false}},
        {"gibbs", {{"M", "burn_in"}, {"M"}, true}},
        {"pgas-gibbs", {{"N", "M", "burn_in"}, {"N", "M"}, false}},
        {"pf-only", {{"N", "resampling", "adaptive", "ess_fraction", "trace"}, {"N"}, false}},
        {"smooth-only", {{"N", "M", "ffbsi_mode", "ffbsi_attempts", "resampling"}, {"N", "M"}, false}},
    };
    return s;
}

[[noreturn]] void fail(const std::string& key, const std::string& msg) {
    throw ConfigError("config: " + key + ": " + msg);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [k, v] : obj.items()) {
        (void)v;
        if (!allowed.count(k)) fail(where + "." + k, "unknown key");
    }
}

double get_number(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(where + "." + key, "expected a number");
    return v.get<double>();
}

std::size_t get_count(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(where + "." + key, "expected a nonnegative integer");
    return v.get<std::size_t>();
}

std::uint64_t get_seed(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail(where + "." + key, "expected a nonnegative integer seed");
    return v.get<std::uint64_t>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_string()) fail(where + "." + key, "expected a string");
    return v.get<std::string>();
}

bool get_bool(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_boolean()) fail(where + "." + key, "expected true or false");
    return v.get<bool>();
}

std::vector<double> get_vector(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) fail(where + "." + key, "expected a number or an array of numbers");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) fail(where + "." + key, "expected numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<std::vector<double>> get_matrix(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (v.is_number()) return {{v.get<double>()}};
    if (!v.is_array() || v.empty()) fail(where + "." + key, "expected a square matrix");
    std::vector<std::vector<double>> out;
    for (const auto& row : v) {
        if (!row.is_array() || row.size() != v.size()) fail(where + "." + key, "expected a square matrix");
        std::vector<double> r;
        for (const auto& e : row) {
            if (!e.is_number()) fail(where + "." + key, "expected numbers");
            r.push_back(e.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

LgssParams parse_lgss(const json& obj, LgssParams p, const std::string& where) {
    check_keys(obj, {"theta", "a", "c", "r"}, where);
    if (obj.contains("theta")) p.theta = get_number(obj, "theta", where);
    if (obj.contains("a")) p.a = get_number(obj, "a", where);
    if (obj.contains("c")) p.c = get_number(obj, "c", where);
    if (obj.contains("r")) p.r = get_number(obj, "r", where);
    try {
        validate(p);
    } catch (const DomainError& e) {
        fail(where, e.what());
    }
    return p;
}

VarveParams parse_varve(const json& obj, VarveParams p, const std::string& where) {
    check_keys(obj, {"phi", "tau"}, where);
    if (obj.contains("phi")) p.phi = get_number(obj, "phi", where);
    if (obj.contains("tau")) p.tau = get_number(obj, "tau", where);
    try {
        validate(p);
    } catch (const DomainError& e) {
        fail(where, e.what());
    }
    return p;
}

ProposalConfig parse_proposal(const json& obj, const std::string& where) {
    check_keys(obj, {"covariance", "scale", "space"}, where);
    ProposalConfig p;
    if (obj.contains("covariance")) p.covariance = get_matrix(obj, "covariance", where);
    if (obj.contains("scale")) p.scale = get_number(obj, "scale", where);
    if (obj.contains("space")) p.space = get_string(obj, "space", where);
    if (!(p.scale > 0.0)) fail(where + ".scale", "must be positive");
    if (p.space != "natural" && p.space != "phi_variance") fail(where + ".space", "must be natural or phi_variance");
    return p;
}

json params_json(const LgssParams& p) { return {{"theta", p.theta}, {"a", p.a}, {"c", p.c}, {"r", p.r}}; }
json params_json(const VarveParams& p) { return {{"phi", p.phi}, {"tau", p.tau}}; }

json proposal_json(const ProposalConfig& p) {
    json j = {{"scale", p.scale}, {"space", p.space}};
    if (!p.covariance.empty()) j["covariance"] = p.covariance;
    return j;
}

}  // namespace

const std::vector<std::string>& known_algorithms() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, s] : schemas()) {
            (void)s;
            v.push_back(k);
        }
        return v;
    }();
    return names;
}

std::string model_name(ModelId id) { return id == ModelId::lgss ? "lgss" : "varve"; }

ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
    ExperimentConfig c;
    check_keys(j, {"version", "model", "data", "algorithm", "seed", "output_dir", "chains"}, "<root>");
    if (!j.contains("version")) fail("version", "missing (current schema version is 1)");
    if (!j.at("version").is_number_integer() || j.at("version").get<int>() != kConfigVersion)
        fail("version", "unsupported schema version (expected 1)");
    for (const char* k : {"model", "data", "algorithm"})
        if (!j.contains(k)) fail(k, "missing");

    const auto& m = j.at("model");
    check_keys(m, {"id", "params", "prior"}, "model");
    if (!m.contains("id")) fail("model.id", "missing");
    const std::string mid = get_string(m, "id", "model");
    if (mid == "lgss") {
        c.model = ModelId::lgss;
        if (m.contains("params")) c.lgss = parse_lgss(m.at("params"), c.lgss, "model.params");
    } else if (mid == "varve") {
        c.model = ModelId::varve;
        if (m.contains("params")) c.varve = parse_varve(m.at("params"), c.varve, "model.params");
    } else {
        fail("model.id", "unknown model '" + mid + "' (expected lgss or varve)");
    }
    if (m.contains("prior")) {
        const auto& pr = m.at("prior");
        check_keys(pr, {"shape", "rate"}, "model.prior");
        if (pr.contains("shape")) c.prior_shape = get_number(pr, "shape", "model.prior");
        if (pr.contains("rate")) c.prior_rate = get_number(pr, "rate", "model.prior");
        if (!(c.prior_shape > 0.0) || !(c.prior_rate > 0.0)) fail("model.prior", "shape and rate must be positive");
    }

    const auto& d = j.at("data");
    check_keys(d, {"simulate", "file"}, "data");
    if (d.contains("simulate") == d.contains("file")) fail("data", "exactly one of 'simulate' or 'file' is required");
    if (d.contains("simulate")) {
        const auto& s = d.at("simulate");
        check_keys(s, {"T", "seed", "params"}, "data.simulate");
        c.simulate = true;
        if (!s.contains("T")) fail("data.simulate.T", "missing");
        c.sim_T = get_count(s, "T", "data.simulate");
        if (s.contains("seed")) c.sim_seed = get_seed(s, "seed", "data.simulate");
        if (s.contains("params")) {
            if (c.model == ModelId::lgss)
                c.sim_lgss = parse_lgss(s.at("params"), c.lgss, "data.simulate.params");
            else
                c.sim_varve = parse_varve(s.at("params"), c.varve, "data.simulate.params");
        }
    } else {
        c.simulate = false;
        std::filesystem::path p = get_string(d, "file", "data");
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        c.data_file = p.lexically_normal().string();
    }

    const auto& a = j.at("algorithm");
    if (!a.is_object() || !a.contains("id")) fail("algorithm.id", "missing");
    c.algorithm = get_string(a, "id", "algorithm");
    const auto it = schemas().find(c.algorithm);
    if (it == schemas().end()) fail("algorithm.id", "unknown algorithm '" + c.algorithm + "'");
    const auto& schema = it->second;
    std::set<std::string> allowed = schema.allowed;
    allowed.insert({"id", "theta0", "hist_bins"});
    check_keys(a, allowed, "algorithm");
    for (const auto& k : schema.required)
        if (!a.contains(k)) fail("algorithm." + k, "required for " + c.algorithm);
    if (schema.lgss_only && c.model != ModelId::lgss) fail("algorithm.id", c.algorithm + " requires the lgss model");

    auto& s = c.settings;
    const bool varve = c.model == ModelId::varve;
    // model-dependent defaults
    if (c.algorithm == "do-ml") {
        s.alpha = varve ? 2.0 / 3.0 : 0.0;
        s.backtracking = !varve;
        s.N = 500;
        s.M = 100;
    }
    if (c.algorithm == "mh" || c.algorithm == "pmh") {
        if (varve) {
            s.proposal.covariance = {{22.51e-5, -4.53e-5}, {-4.53e-5, 2.57e-5}};
            s.proposal.scale = 2.562 * 2.562 / 2.0;
            s.proposal.space = "phi_variance";
        } else {
            s.proposal.covariance = {{0.1}};
        }
    }
    const std::string w = "algorithm";
    if (a.contains("N")) s.N = get_count(a, "N", w);
    if (a.contains("M")) s.M = get_count(a, "M", w);
    if (a.contains("K")) s.K = get_count(a, "K", w);
    if (a.contains("burn_in")) s.burn_in = get_count(a, "burn_in", w);
    if (a.contains("gamma")) s.gamma = get_number(a, "gamma", w);
    if (a.contains("alpha")) s.alpha = get_number(a, "alpha", w);
    if (a.contains("tolerance")) s.tolerance = get_number(a, "tolerance", w);
    if (a.contains("backtracking")) s.backtracking = get_bool(a, "backtracking", w);
    if (a.contains("gradient")) s.gradient = get_string(a, "gradient", w);
    if (a.contains("coordinates")) s.coordinates = get_string(a, "coordinates", w);
    if (a.contains("resampling")) s.resampling = get_string(a, "resampling", w);
    if (a.contains("adaptive")) s.adaptive = get_bool(a, "adaptive", w);
    if (a.contains("ess_fraction")) s.ess_fraction = get_number(a, "ess_fraction", w);
    if (a.contains("ffbsi_mode")) s.ffbsi_mode = get_string(a, "ffbsi_mode", w);
    if (a.contains("ffbsi_attempts")) s.ffbsi_attempts = get_count(a, "ffbsi_attempts", w);
    if (a.contains("step_exponent")) s.step_exponent = get_number(a, "step_exponent", w);
    if (a.contains("theta0")) s.theta0 = get_vector(a, "theta0", w);
    if (a.contains("trace")) s.trace = get_bool(a, "trace", w);
    if (a.contains("hist_bins")) s.hist_bins = get_count(a, "hist_bins", w);
    if (a.contains("proposal")) {
        const auto defaults = s.proposal;
        s.proposal = parse_proposal(a.at("proposal"), "algorithm.proposal");
        if (s.proposal.covariance.empty()) s.proposal.covariance = defaults.covariance;
        if (!a.at("proposal").contains("scale")) s.proposal.scale = defaults.scale;
        if (!a.at("proposal").contains("space")) s.proposal.space = defaults.space;
    }
    if (a.contains("pilot")) {
        const auto& p = a.at("pilot");
        check_keys(p, {"M", "burn_in", "proposal", "scale"}, "algorithm.pilot");
        s.pilot.enabled = true;
        if (p.contains("M")) s.pilot.M = get_count(p, "M", "algorithm.pilot");
        if (p.contains("burn_in")) s.pilot.burn_in = get_count(p, "burn_in", "algorithm.pilot");
        if (p.contains("scale")) s.pilot.scale = get_number(p, "scale", "algorithm.pilot");
        s.pilot.proposal = s.proposal;
        if (p.contains("proposal")) {
            s.pilot.proposal = parse_proposal(p.at("proposal"), "algorithm.pilot.proposal");
            if (s.pilot.proposal.covariance.empty()) s.pilot.proposal.covariance = s.proposal.covariance;
        }
        if (s.pilot.burn_in + 2 > s.pilot.M) fail("algorithm.pilot", "M must exceed burn_in by at least 2");
        if (!(s.pilot.scale > 0.0)) fail("algorithm.pilot.scale", "must be positive");
    }

    // range checks
    const std::size_t dim = varve ? 2 : 1;
    const bool needs_n = schema.allowed.count("N") > 0;
    if (needs_n && s.N == 0) fail("algorithm.N", "must be at least 1");
    if ((c.algorithm == "psaem" || c.algorithm == "pgas-gibbs") && s.N < 2) fail("algorithm.N", "must be at least 2");
    if ((c.algorithm == "psem" || c.algorithm == "smooth-only" || c.algorithm == "do-ml") && s.M == 0)
        fail("algorithm.M", "must be at least 1");
    if (!(s.gamma > 0.0)) fail("algorithm.gamma", "must be positive");
    if (s.alpha < 0.0) fail("algorithm.alpha", "the step decay exponent must be nonnegative (steps are gamma k^-alpha)");
    if (!(s.tolerance >= 0.0)) fail("algorithm.tolerance", "must be nonnegative");
    if (s.gradient != "exact" && s.gradient != "particle") fail("algorithm.gradient", "must be exact or particle");
    if (varve && s.gradient == "exact" && a.contains("gradient"))
        fail("algorithm.gradient", "exact gradients exist only for lgss");
    if (s.coordinates != "transformed" && s.coordinates != "raw")
        fail("algorithm.coordinates", "must be transformed or raw");
    const bool stochastic_gradient = c.algorithm == "do-ml" && (varve || s.gradient == "particle");
    if (stochastic_gradient && s.backtracking) fail("algorithm.backtracking", "needs an exact objective (lgss, exact gradient)");
    try {
        (void)parse_resampling_scheme(s.resampling);
    } catch (const ConfigError&) {
        fail("algorithm.resampling", "must be multinomial, systematic or stratified");
    }
    if (!(s.ess_fraction > 0.0 && s.ess_fraction <= 1.0)) fail("algorithm.ess_fraction", "must lie in (0, 1]");
    if (s.ffbsi_mode != "exhaustive" && s.ffbsi_mode != "rejection")
        fail("algorithm.ffbsi_mode", "must be exhaustive or rejection");
    if (s.ffbsi_attempts == 0) fail("algorithm.ffbsi_attempts", "must be at least 1");
    if (!(s.step_exponent > 0.5 && s.step_exponent <= 1.0))
        fail("algorithm.step_exponent", "must lie in (0.5, 1] so that the steps satisfy the Robbins-Monro conditions");
    if (!s.theta0.empty() && s.theta0.size() != dim) fail("algorithm.theta0", "wrong number of parameters");
    if (c.algorithm == "mh" || c.algorithm == "pmh") {
        for (const auto* prop : {&s.proposal, &s.pilot.proposal}) {
            if (prop == &s.pilot.proposal && !s.pilot.enabled) continue;
            if (prop->covariance.size() != dim) fail("algorithm.proposal.covariance", "wrong dimension");
            if (prop->space == "phi_variance" && !varve) fail("algorithm.proposal.space", "phi_variance is varve-only");
        }
    }
    if (s.burn_in > s.M && (c.algorithm == "mh" || c.algorithm == "pmh" || c.algorithm == "gibbs" ||
                            c.algorithm == "pgas-gibbs"))
        fail("algorithm.burn_in", "exceeds M");

    if (j.contains("seed")) c.seed = get_seed(j, "seed", "<root>");
    if (j.contains("output_dir")) {
        std::filesystem::path p = get_string(j, "output_dir", "<root>");
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        c.output_dir = p.lexically_normal().string();
    }
    if (j.contains("chains")) c.chains = get_count(j, "chains", "<root>");
    if (c.chains == 0) fail("chains", "must be at least 1");
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + path.string() + ": " + e.what());
    }
    return parse_config(j, path.parent_path());
}

json to_json(const ExperimentConfig& c) {
    json j;
    j["version"] = c.version;
    j["model"] = {{"id", model_name(c.model)},
                  {"params", c.model == ModelId::lgss ? params_json(c.lgss) : params_json(c.varve)},
                  {"prior", {{"shape", c.prior_shape}, {"rate", c.prior_rate}}}};
    if (c.simulate) {
        json s = {{"T", c.sim_T}};
        if (c.sim_seed) s["seed"] = *c.sim_seed;
        if (c.sim_lgss) s["params"] = params_json(*c.sim_lgss);
        if (c.sim_varve) s["params"] = params_json(*c.sim_varve);
        j["data"] = {{"simulate", s}};
    } else {
        j["data"] = {{"file", c.data_file}};
    }
    const auto& s = c.settings;
    const auto& schema = schemas().at(c.algorithm);
    json a = {{"id", c.algorithm}, {"hist_bins", s.hist_bins}};
    if (!s.theta0.empty()) a["theta0"] = s.theta0;
    const std::map<std::string, json> values = {
        {"N", s.N},
        {"M", s.M},
        {"K", s.K},
        {"burn_in", s.burn_in},
        {"gamma", s.gamma},
        {"alpha", s.alpha},
        {"tolerance", s.tolerance},
        {"backtracking", s.backtracking},
        {"gradient", s.gradient},
        {"coordinates", s.coordinates},
        {"resampling", s.resampling},
        {"adaptive", s.adaptive},
        {"ess_fraction", s.ess_fraction},
        {"ffbsi_mode", s.ffbsi_mode},
        {"ffbsi_attempts", s.ffbsi_attempts},
        {"step_exponent", s.step_exponent},
        {"proposal", proposal_json(s.proposal)},
        {"trace", s.trace},
    };
    for (const auto& key : schema.allowed) {
        if (key == "pilot") continue;
        if (key == "gradient" && c.model == ModelId::varve) continue;
        a[key] = values.at(key);
    }
    if (s.pilot.enabled) {
        a["pilot"] = {{"M", s.pilot.M},
                      {"burn_in", s.pilot.burn_in},
                      {"scale", s.pilot.scale},
                      {"proposal", proposal_json(s.pilot.proposal)}};
    }
    j["algorithm"] = a;
    j["seed"] = c.seed;
    j["output_dir"] = c.output_dir;
    j["chains"] = c.chains;
    return j;
}

}  // namespace ssmid::harness
