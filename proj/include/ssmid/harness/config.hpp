#pragma once

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ssmid/lgss.hpp"
#include "ssmid/varve.hpp"

namespace ssmid::harness {

inline constexpr int kConfigVersion = 1;

enum class ModelId { lgss, varve };

struct ProposalConfig {
    std::vector<std::vector<double>> covariance;  // empty: model default
    double scale = 1.0;
    std::string space = "natural";  // natural | phi_variance (varve only)
};

struct PilotConfig {
    bool enabled = false;
    std::size_t M = 2000;
    std::size_t burn_in = 500;
    ProposalConfig proposal;
    double scale = 1.0;  // multiplies the pilot covariance for the main run
};

// Union of all algorithm settings; validation enforces which keys each algorithm accepts.
struct AlgorithmSettings {
    std::size_t N = 0;
    std::size_t M = 0;
    std::size_t K = 0;
    std::size_t burn_in = 0;
    double gamma = 0.01;
    double alpha = 0.0;
    double tolerance = 1e-6;
    bool backtracking = true;
    std::string gradient = "exact";          // do-ml on lgss: exact | particle
    std::string coordinates = "transformed";  // do-ml on varve
    std::string resampling = "multinomial";
    bool adaptive = false;
    double ess_fraction = 0.5;
    std::string ffbsi_mode = "rejection";
    std::size_t ffbsi_attempts = 50;
    double step_exponent = 0.7;
    std::vector<double> theta0;  // empty: model params
    ProposalConfig proposal;
    PilotConfig pilot;
    bool trace = false;
    std::size_t hist_bins = 0;  // 0: Freedman-Diaconis
};

struct ExperimentConfig {
    int version = kConfigVersion;
    ModelId model = ModelId::lgss;
    LgssParams lgss;
    VarveParams varve;
    double prior_shape = 0.01;
    double prior_rate = 0.01;

    bool simulate = true;
    std::size_t sim_T = 100;
    std::optional<std::uint64_t> sim_seed;
    std::optional<LgssParams> sim_lgss;
    std::optional<VarveParams> sim_varve;
    std::string data_file;

    std::string algorithm;
    AlgorithmSettings settings;
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    std::size_t chains = 1;
};

const std::vector<std::string>& known_algorithms();

// Parses and validates; throws ConfigError naming the offending key. Relative
// data paths are resolved against base_dir.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

// Normalised echo with all defaults filled in; parse_config(to_json(c)) reproduces c.
nlohmann::json to_json(const ExperimentConfig& c);

std::string model_name(ModelId id);

}  // namespace ssmid::harness
