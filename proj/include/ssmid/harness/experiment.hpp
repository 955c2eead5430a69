#pragma once

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "ssmid/chain.hpp"
#include "ssmid/dataset.hpp"
#include "ssmid/harness/config.hpp"

namespace ssmid::harness {

struct RunReport {
    nlohmann::json config_echo;
    double wall_time_seconds = 0.0;
    nlohmann::json summary;
    std::vector<std::string> files;
};

struct LoadedData {
    Dataset data;
    std::vector<double> states;  // only for simulated data
};

// Simulates or ingests the dataset the config asks for.
LoadedData load_data(const ExperimentConfig& config);

// Runs the configured algorithm and writes its artefacts into config.output_dir.
RunReport run_experiment(const ExperimentConfig& config);

// Posterior summary (means, sds, IACT, ESS, MC standard errors, acceptance rate).
nlohmann::json summarise_draws(const std::vector<std::string>& names, const std::vector<std::vector<double>>& draws,
                               const std::vector<std::uint8_t>& accepted, std::size_t burn_in);
nlohmann::json summarise_chain(const ParameterChain& chain);

}  // namespace ssmid::harness
