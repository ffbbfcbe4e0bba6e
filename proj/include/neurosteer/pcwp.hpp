// Path control with preview: speed-scheduled error feedback plus curvature
// feedforward. Serves as the pre-training target and the comparison baseline.
#pragma once

#include <cstddef>
#include <vector>

namespace neurosteer {

struct ControlState {
    double ydot = 0.0;    // m/s lateral velocity
    double psidot = 0.0;  // rad/s yaw rate
    double e_y = 0.0;     // m lateral error, left-positive (path relative to vehicle)
    double e_psi = 0.0;   // rad heading error
};

struct ScheduledGains {
    double k_ye = 0.0;    // rad/m
    double k_psie = 0.0;  // rad/rad
    double k_ff = 0.0;    // m, characteristic velocity gain
};

// Per-breakpoint gain tables over longitudinal speed, linearly interpolated
// and clamped at the ends.
struct GainSchedule {
    std::vector<double> breakpoints;  // m/s, strictly increasing
    std::vector<double> k_ye;
    std::vector<double> k_psie;
    std::vector<double> k_ff;
    double wheelbase = 2.7;     // m
    double delta_max = 0.52;    // rad steering saturation

    void validate() const;
};

ScheduledGains interp_gains(double u, const GainSchedule& gs);

// delta = k_ye*e_y + k_psie*e_psi + (L + k_ff)*kappa, clamped to +-delta_max.
// The printed gain vector zeroes the ydot and psidot channels; ControlState
// still carries them so richer baselines fit the same surface.
double pcwp_steering(const ControlState& x, double kappa, double u, const GainSchedule& gs);

}  // namespace neurosteer
