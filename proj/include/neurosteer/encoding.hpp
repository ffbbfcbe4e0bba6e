// Gaussian population coding of the controller inputs.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace neurosteer {

// A bank of Gaussian tuning curves spanning [lo, hi]. Activation of neuron i
// for value v is gain * exp(-(v - center_i)^2 / (2 sigma^2)); values outside
// the range are admitted and fall on the tails.
struct PopulationCode {
    std::size_t n = 20;
    double lo = -1.0;
    double hi = 1.0;
    double sigma = 0.1;   // same units as the encoded variable
    double gain = 4.0;    // peak input current
    std::vector<double> centers;

    // Evenly spaced centers including both endpoints. sigma_factor scales the
    // center spacing. Centers are built as signed offsets from the midpoint so
    // that a symmetric range yields bitwise-negation-symmetric centers; the
    // closed-loop mirror invariant rests on that.
    static PopulationCode uniform(std::size_t n, double lo, double hi, double gain,
                                  double sigma_factor = 1.0);

    void validate() const;
    double spacing() const;
};

// Activation currents for one value, one entry per neuron.
void encode(double value, const PopulationCode& code, std::span<double> out);
std::vector<double> encode(double value, const PopulationCode& code);

// Signed curvature from a signed radius; infinite radius means straight.
// R == 0 is degenerate and rejected.
double curvature_from_radius(double radius);

}  // namespace neurosteer
