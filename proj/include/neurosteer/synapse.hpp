// The axo-axonic synapse: hidden neuron j of one matrix receives
// u_a[j] * sum_i u_d[i] * w[i][j], the j-th partial of the bilinear form.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace neurosteer {

inline constexpr std::size_t kNeuronsPerVariable = 20;
inline constexpr std::size_t kDendriticCount = 60;   // e_y, e_psi, kappa populations
inline constexpr std::size_t kAxoAxonicCount = 20;   // longitudinal speed population
inline constexpr std::size_t kHiddenPerMatrix = 20;  // agonist / antagonist
inline constexpr std::size_t kOutputCount = 2;
inline constexpr std::size_t kTotalNeurons =
    kDendriticCount + kAxoAxonicCount + 2 * kHiddenPerMatrix + kOutputCount;
static_assert(kTotalNeurons == 122);

// Row-major dendritic-by-axo-axonic weight matrix, entries in [0, w_max].
class WeightMatrix {
  public:
    WeightMatrix() : data_(kDendriticCount * kAxoAxonicCount, 0.0) {}

    double& at(std::size_t pre, std::size_t post) { return data_[pre * kAxoAxonicCount + post]; }
    double at(std::size_t pre, std::size_t post) const {
        return data_[pre * kAxoAxonicCount + post];
    }
    std::vector<double>& raw() { return data_; }
    const std::vector<double>& raw() const { return data_; }

  private:
    std::vector<double> data_;
};

// Excitatory/inhibitory pair. Both matrices are nonnegative; the sign of the
// decoded output comes from which hidden population they feed.
struct SynapsePair {
    WeightMatrix w_e;
    WeightMatrix w_i;
    double w_max = 1.0;

    void clamp();
    void validate() const;
};

// Hidden input currents for one matrix. The per-variable 20-neuron blocks are
// summed by pairing index k with its reflection 19-k before accumulating, so a
// mirrored dendritic vector against the mirrored matrix reproduces the same
// float result; the mirror-symmetry test depends on this.
void synapse_currents(std::span<const double> dendritic_trace,
                      std::span<const double> axo_trace, const WeightMatrix& w,
                      std::span<double> out);

std::vector<double> synapse_currents(std::span<const double> dendritic_trace,
                                     std::span<const double> axo_trace, const WeightMatrix& w);

// Dendritic index of the mirror image of neuron i: reversal within its
// 20-neuron variable block.
std::size_t mirror_dendritic_index(std::size_t i);

}  // namespace neurosteer
