#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ssmid/chain.hpp"
#include "ssmid/diagnostics.hpp"
#include "ssmid/particle_system.hpp"

namespace ssmid::harness {

// Shortest text that parses back to the same double ("inf", "-inf", "nan" for non-finite).
std::string format_double(double v);

void write_chain_csv(const std::filesystem::path& path, const ParameterChain& chain);

struct ChainTable {
    std::vector<std::string> names;
    std::vector<std::vector<double>> draws;
    std::vector<double> loglik;
    std::vector<std::uint8_t> accepted;
};
ChainTable read_chain_csv(const std::filesystem::path& path);

// Columns: k, <names...>, objective, step_size
void write_iterates_csv(const std::filesystem::path& path, const std::vector<std::string>& names,
                        const std::vector<std::vector<double>>& params, const std::vector<double>& objective,
                        const std::vector<double>& step_size);

void write_histogram_csv(const std::filesystem::path& path, const Histogram& h);

// One row per (t, i): t, i, x, logw, a (a is empty at t = 0). 1-based t and i as in the maths.
void write_trace_csv(const std::filesystem::path& path, const ParticleSystem& ps);

// Generic numeric table with a header row.
void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& columns);

}  // namespace ssmid::harness
