#include "neurosteer/lif.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace neurosteer {

void LifParams::validate() const {
    if (!(tau > 0.0) || !(u_th > 0.0) || !(dt > 0.0))
        throw std::invalid_argument("LifParams: tau, u_th and dt must be positive");
    if (!(dt * tau < 1.0))
        throw std::invalid_argument("LifParams: dt*tau must stay below 1 for Euler stability");
}

LifPopulation::LifPopulation(std::size_t n, const LifParams& params, double trace_tau)
    : params_(params), trace_tau_(trace_tau) {
    params_.validate();
    if (!(trace_tau > 0.0)) throw std::invalid_argument("LifPopulation: trace_tau must be positive");
    trace_decay_ = std::exp(-params_.dt / trace_tau_);
    u_.assign(n, 0.0);
    spiked_.assign(n, 0);
    trace_.assign(n, 0.0);
}

void LifPopulation::step(std::span<const double> current) {
    if (current.size() != u_.size())
        throw std::invalid_argument("LifPopulation::step: current size mismatch");
    const double leak_step = params_.tau * params_.dt;
    const double u_th = params_.u_th;
    for (std::size_t i = 0; i < u_.size(); ++i) {
        const double c = current[i];
        if (!std::isfinite(c))
            throw std::invalid_argument("LifPopulation::step: non-finite input current at neuron " +
                                        std::to_string(i));
        double u = lif_euler_update(u_[i], leak_step, c);
        if (u < 0.0) u = 0.0;
        if (u > u_th) {
            spiked_[i] = 1;
            u = 0.0;
        } else {
            spiked_[i] = 0;
        }
        u_[i] = u;
        trace_[i] = trace_[i] * trace_decay_ + (spiked_[i] ? 1.0 : 0.0);
    }
}

void LifPopulation::reset() {
    std::fill(u_.begin(), u_.end(), 0.0);
    std::fill(spiked_.begin(), spiked_.end(), 0);
    std::fill(trace_.begin(), trace_.end(), 0.0);
}

std::size_t lif_spike_period(double current, const LifParams& params, std::size_t max_steps) {
    // The Euler iterate climbs monotonically toward `current` from reset, so a
    // drive at or below threshold can never cross it.
    if (!(current > params.u_th)) return 0;
    const double leak_step = params.tau * params.dt;
    double u = 0.0;
    for (std::size_t n = 1; n <= max_steps; ++n) {
        u = lif_euler_update(u, leak_step, current);
        if (u > params.u_th) return n;
    }
    return 0;
}

double steady_trace_level(std::size_t period, double trace_decay) {
    if (period == 0) return 0.0;
    return 1.0 / (static_cast<double>(period) * (1.0 - trace_decay));
}

}  // namespace neurosteer
