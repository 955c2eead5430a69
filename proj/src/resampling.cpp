#include "ssmid/resampling.hpp"

#include <algorithm>
#include <boost/random/exponential_distribution.hpp>
#include <cmath>

#include "ssmid/errors.hpp"

namespace ssmid {

ResamplingScheme parse_resampling_scheme(std::string_view name) {
    if (name == "multinomial") return ResamplingScheme::multinomial;
    if (name == "systematic") return ResamplingScheme::systematic;
    if (name == "stratified") return ResamplingScheme::stratified;
    throw ConfigError("unknown resampling scheme '" + std::string(name) + "'");
}

std::string to_string(ResamplingScheme scheme) {
    switch (scheme) {
        case ResamplingScheme::multinomial: return "multinomial";
        case ResamplingScheme::systematic: return "systematic";
        case ResamplingScheme::stratified: return "stratified";
    }
    return "multinomial";
}

void check_normalised(std::span<const double> weights) {
    if (weights.empty()) throw DomainError("resample: empty weight vector");
    double s = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("resample: weights must be finite and nonnegative");
        s += w;
    }
    if (std::abs(s - 1.0) > 1e-8) throw DomainError("resample: weights are not normalised");
}

void Resampler::operator()(std::span<const double> weights, Rng& rng, std::span<std::size_t> out) {
    const std::size_t n = weights.size();
    cdf_.resize(n);
    last_positive_ = 0;
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        acc += weights[j];
        cdf_[j] = acc;
        if (weights[j] > 0.0) last_positive_ = j;
    }
    const double total = acc;
    const std::size_t m = out.size();
    if (m == 0) return;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    switch (scheme_) {
        case ResamplingScheme::multinomial: {
            // sorted uniforms from normalised exponential spacings, then a single merge pass
            boost::random::exponential_distribution<double> expo(1.0);
            spacing_.resize(m + 1);
            double s = 0.0;
            for (std::size_t i = 0; i <= m; ++i) {
                s += expo(rng);
                spacing_[i] = s;
            }
            const double scale = total / s;
            std::size_t j = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const double u = spacing_[i] * scale;
                while (j < n && cdf_[j] <= u) ++j;
                out[i] = j < n ? j : last_positive_;
            }
            break;
        }
        case ResamplingScheme::systematic: {
            const double u0 = unif(rng);
            std::size_t j = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const double u = (static_cast<double>(i) + u0) / static_cast<double>(m) * total;
                while (j < n && cdf_[j] <= u) ++j;
                out[i] = j < n ? j : last_positive_;
            }
            break;
        }
        case ResamplingScheme::stratified: {
            std::size_t j = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const double u = (static_cast<double>(i) + unif(rng)) / static_cast<double>(m) * total;
                while (j < n && cdf_[j] <= u) ++j;
                out[i] = j < n ? j : last_positive_;
            }
            break;
        }
    }
}

std::vector<std::size_t> resample(std::span<const double> weights, std::size_t n, ResamplingScheme scheme, Rng& rng) {
    check_normalised(weights);
    if (n == 0) throw DomainError("resample: N must be at least 1");
    std::vector<std::size_t> out(n);
    Resampler r(scheme);
    r(weights, rng, out);
    return out;
}

}  // namespace ssmid
