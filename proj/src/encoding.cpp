#include "neurosteer/encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace neurosteer {

PopulationCode PopulationCode::uniform(std::size_t n, double lo, double hi, double gain,
                                       double sigma_factor) {
    if (n < 2) throw std::invalid_argument("PopulationCode: need at least two neurons");
    if (!(hi > lo)) throw std::invalid_argument("PopulationCode: hi must exceed lo");
    PopulationCode code;
    code.n = n;
    code.lo = lo;
    code.hi = hi;
    code.gain = gain;
    const double mid = 0.5 * (lo + hi);
    const double spacing = (hi - lo) / static_cast<double>(n - 1);
    code.sigma = sigma_factor * spacing;
    code.centers.resize(n);
    const double half = 0.5 * static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        code.centers[i] = mid + (static_cast<double>(i) - half) * spacing;
    code.validate();
    return code;
}

void PopulationCode::validate() const {
    if (centers.size() != n || n < 2)
        throw std::invalid_argument("PopulationCode: center table does not match n");
    if (!(sigma > 0.0)) throw std::invalid_argument("PopulationCode: sigma must be positive");
    for (std::size_t i = 1; i < n; ++i)
        if (!(centers[i] > centers[i - 1]))
            throw std::invalid_argument("PopulationCode: centers must be strictly increasing");
}

double PopulationCode::spacing() const { return (hi - lo) / static_cast<double>(n - 1); }

void encode(double value, const PopulationCode& code, std::span<double> out) {
    if (!std::isfinite(value)) throw std::invalid_argument("encode: value must be finite");
    if (out.size() != code.n) throw std::invalid_argument("encode: output size mismatch");
    const double inv_two_sigma_sq = 1.0 / (2.0 * code.sigma * code.sigma);
    for (std::size_t i = 0; i < code.n; ++i) {
        const double d = value - code.centers[i];
        out[i] = code.gain * std::exp(-(d * d) * inv_two_sigma_sq);
    }
}

std::vector<double> encode(double value, const PopulationCode& code) {
    std::vector<double> out(code.n);
    encode(value, code, out);
    return out;
}

double curvature_from_radius(double radius) {
    if (radius == 0.0) throw std::invalid_argument("curvature_from_radius: zero radius");
    if (std::isinf(radius)) return 0.0;
    if (!std::isfinite(radius)) throw std::invalid_argument("curvature_from_radius: NaN radius");
    return 1.0 / radius;
}

}  // namespace neurosteer
