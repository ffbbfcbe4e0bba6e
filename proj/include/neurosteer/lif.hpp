// Leaky integrate-and-fire dynamics: u' = tau*(c - u), spike and reset at u_th,
// plus the exponentially filtered spike trace each downstream stage consumes.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace neurosteer {

struct LifParams {
    double tau = 100.0;   // 1/s, rate constant of the membrane
    double u_th = 1.0;    // firing threshold
    double dt = 1.0e-3;   // s, forward-Euler step

    void validate() const;  // throws std::invalid_argument on a bad combination
};

// One population of LIF neurons with a per-neuron activity trace. The trace
// decays by exp(-dt/trace_tau) every step and gains +1 on a spike; its running
// level is what the synapse model and the decoder read as "activity".
class LifPopulation {
  public:
    LifPopulation(std::size_t n, const LifParams& params, double trace_tau);

    void step(std::span<const double> current);
    void reset();

    std::size_t size() const { return u_.size(); }
    const std::vector<double>& membrane() const { return u_; }
    const std::vector<std::uint8_t>& spiked() const { return spiked_; }
    const std::vector<double>& trace() const { return trace_; }
    const LifParams& params() const { return params_; }
    double trace_tau() const { return trace_tau_; }
    double trace_decay() const { return trace_decay_; }

  private:
    LifParams params_;
    double trace_tau_;
    double trace_decay_;  // exp(-dt/trace_tau)
    std::vector<double> u_;
    std::vector<std::uint8_t> spiked_;
    std::vector<double> trace_;
};

// Single Euler update shared by the live population and the rate-equilibrium
// predictor, so both walk the exact same float sequence.
inline double lif_euler_update(double u, double leak_step, double current) {
    return u + leak_step * (current - u);
}

// Number of Euler steps between spikes under a constant drive, replaying the
// discrete recurrence from reset. Returns 0 when the neuron stays silent
// (current <= threshold, or no crossing within max_steps).
std::size_t lif_spike_period(double current, const LifParams& params, std::size_t max_steps);

// Mean trace level of a neuron firing every `period` steps: the fixed point of
// decay-by-rho plus one per spike, averaged over a full period.
double steady_trace_level(std::size_t period, double trace_decay);

}  // namespace neurosteer
