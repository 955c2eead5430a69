#pragma once

#include <boost/random/normal_distribution.hpp>
#include <cstdint>
#include <random>
#include <string_view>

namespace ssmid {

using Rng = std::mt19937_64;

// Stream seed for (component, index) under a master seed. SplitMix64 over the
// master seed combined with an FNV-1a hash of the component name.
std::uint64_t derive_seed(std::uint64_t master, std::string_view component, std::uint64_t index = 0);

Rng make_stream(std::uint64_t master, std::string_view component, std::uint64_t index = 0);

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Ziggurat sampler: stateless, so constructing it per draw costs nothing.
inline double normal_draw(Rng& rng, double mean, double sd) {
    return boost::random::normal_distribution<double>(mean, sd)(rng);
}

// Shape-rate parameterisation.
inline double gamma_draw(Rng& rng, double shape, double rate) {
    return std::gamma_distribution<double>(shape, 1.0 / rate)(rng);
}

}  // namespace ssmid
