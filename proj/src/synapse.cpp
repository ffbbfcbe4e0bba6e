#include "neurosteer/synapse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace neurosteer {

void SynapsePair::clamp() {
    auto clip = [this](std::vector<double>& v) {
        for (double& x : v) x = std::clamp(x, 0.0, w_max);
    };
    clip(w_e.raw());
    clip(w_i.raw());
}

void SynapsePair::validate() const {
    if (!(w_max > 0.0)) throw std::invalid_argument("SynapsePair: w_max must be positive");
    auto check = [this](const std::vector<double>& v) {
        for (double x : v)
            if (!(x >= 0.0) || !(x <= w_max))
                throw std::invalid_argument("SynapsePair: weight outside [0, w_max]");
    };
    check(w_e.raw());
    check(w_i.raw());
}

std::size_t mirror_dendritic_index(std::size_t i) {
    const std::size_t block = i / kNeuronsPerVariable;
    const std::size_t k = i % kNeuronsPerVariable;
    return block * kNeuronsPerVariable + (kNeuronsPerVariable - 1 - k);
}

void synapse_currents(std::span<const double> dendritic_trace, std::span<const double> axo_trace,
                      const WeightMatrix& w, std::span<double> out) {
    if (dendritic_trace.size() != kDendriticCount || axo_trace.size() != kAxoAxonicCount ||
        out.size() != kHiddenPerMatrix)
        throw std::invalid_argument("synapse_currents: dimension mismatch");

    constexpr std::size_t kBlocks = kDendriticCount / kNeuronsPerVariable;
    constexpr std::size_t kHalf = kNeuronsPerVariable / 2;
    for (std::size_t j = 0; j < kHiddenPerMatrix; ++j) {
        double total = 0.0;
        for (std::size_t b = 0; b < kBlocks; ++b) {
            const std::size_t base = b * kNeuronsPerVariable;
            double block_sum = 0.0;
            for (std::size_t k = 0; k < kHalf; ++k) {
                const std::size_t lo = base + k;
                const std::size_t hi = base + kNeuronsPerVariable - 1 - k;
                const double p = dendritic_trace[lo] * w.at(lo, j);
                const double q = dendritic_trace[hi] * w.at(hi, j);
                block_sum += p + q;
            }
            total += block_sum;
        }
        out[j] = axo_trace[j] * total;
    }
}

std::vector<double> synapse_currents(std::span<const double> dendritic_trace,
                                     std::span<const double> axo_trace, const WeightMatrix& w) {
    std::vector<double> out(kHiddenPerMatrix);
    synapse_currents(dendritic_trace, axo_trace, w, out);
    return out;
}

}  // namespace neurosteer
