#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace ssmid {

struct Dataset {
    std::vector<double> y;
    std::string label;

    std::size_t size() const noexcept { return y.size(); }
    std::span<const double> view() const noexcept { return y; }
};

// One value per line; an optional first line starting with '#' is a header.
// Blank lines are skipped. Errors name the offending line.
Dataset ingest_dataset(const std::filesystem::path& path);

void write_dataset(const std::filesystem::path& path, const Dataset& data);

}  // namespace ssmid
