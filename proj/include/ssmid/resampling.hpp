#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssmid/random.hpp"

namespace ssmid {

enum class ResamplingScheme { multinomial, systematic, stratified };

ResamplingScheme parse_resampling_scheme(std::string_view name);
std::string to_string(ResamplingScheme scheme);

// Throws DomainError if the weights are negative, non-finite, or do not sum to 1 within 1e-8.
void check_normalised(std::span<const double> weights);

// Reusable resampler; keeps its cumulative-sum buffer between calls. Indices are 0-based.
class Resampler {
public:
    explicit Resampler(ResamplingScheme scheme = ResamplingScheme::multinomial) : scheme_(scheme) {}

    // Fills `out` with out.size() ancestor indices; weights are assumed normalised.
    void operator()(std::span<const double> weights, Rng& rng, std::span<std::size_t> out);

    ResamplingScheme scheme() const noexcept { return scheme_; }

private:
    ResamplingScheme scheme_;
    std::vector<double> cdf_;
    std::vector<double> spacing_;
    std::size_t last_positive_ = 0;
};

std::vector<std::size_t> resample(std::span<const double> weights, std::size_t n, ResamplingScheme scheme, Rng& rng);

}  // namespace ssmid
