#pragma once

#include <map>
#include <string>
#include <string_view>

#include <su11/coupling.hpp>

namespace su11 {

// One scan axis.  "phi" axes are periodic and sampled half-open:
// value_i = min + i*(max-min)/steps; all other axes are sampled closed:
// value_i = min + i*(max-min)/(steps-1).
struct Axis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int steps = 2;
};

bool axis_is_periodic(const Axis& a);
double axis_value(const Axis& a, int i);
double axis_step(const Axis& a);

enum class StateFamily { pcs, bgcs };

const char* to_string(StateFamily f);
StateFamily family_from_string(std::string_view s);

// Declared time normalization:
//   t  - absolute time
//   tl - tau = lambda * t
//   tw - tau = omega * t
//   gt - tau = g * t with g = sqrt|omega^2 - lambda^2| (rejected at resonance)
enum class TimeUnit { t, tl, tw, gt };

const char* to_string(TimeUnit u);
TimeUnit time_unit_from_string(std::string_view s);

// Absolute time for a declared (value, unit) pair; DomainError when the unit
// divisor vanishes.
double resolve_time(const CouplingParams& c, double value, TimeUnit unit);

// Two-axis scan specification.  axis1 is the state-amplitude axis
// ("r" for pcs, "zmag" for bgcs), axis2 the phase axis ("phi");
// fixed carries the held scalar parameters (omega, lambda, k).
struct GridSpec {
    Axis axis1;
    Axis axis2;
    StateFamily family = StateFamily::pcs;
    std::map<std::string, double> fixed;  // omega, lambda, k
    double time_value = 0.0;
    TimeUnit time_unit = TimeUnit::t;
};

// Throws DomainError for steps < 2, min >= max, unknown axis names for the
// family, or missing/invalid fixed parameters.
void validate(const GridSpec& g);

CouplingParams coupling_of(const GridSpec& g);
double fixed_param(const GridSpec& g, const std::string& name);

}  // namespace su11
