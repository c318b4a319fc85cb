#include <su11/grid.hpp>

#include <cmath>
#include <string>

namespace su11 {

bool axis_is_periodic(const Axis& a) { return a.name == "phi"; }

double axis_value(const Axis& a, int i) { return a.min + i * axis_step(a); }

double axis_step(const Axis& a) {
    const int intervals = axis_is_periodic(a) ? a.steps : a.steps - 1;
    return (a.max - a.min) / intervals;
}

const char* to_string(StateFamily f) { return f == StateFamily::pcs ? "pcs" : "bgcs"; }

StateFamily family_from_string(std::string_view s) {
    if (s == "pcs") return StateFamily::pcs;
    if (s == "bgcs") return StateFamily::bgcs;
    throw DomainError("unknown family '" + std::string(s) + "' (expected pcs|bgcs)");
}

const char* to_string(TimeUnit u) {
    switch (u) {
        case TimeUnit::t: return "t";
        case TimeUnit::tl: return "tl";
        case TimeUnit::tw: return "tw";
        case TimeUnit::gt: return "gt";
    }
    return "?";
}

TimeUnit time_unit_from_string(std::string_view s) {
    if (s == "t") return TimeUnit::t;
    if (s == "tl") return TimeUnit::tl;
    if (s == "tw") return TimeUnit::tw;
    if (s == "gt") return TimeUnit::gt;
    throw DomainError("unknown time unit '" + std::string(s) + "' (expected t|tl|tw|gt)");
}

double resolve_time(const CouplingParams& c, double value, TimeUnit unit) {
    validate(c);
    if (!(value >= 0.0) || !std::isfinite(value))
        throw DomainError("time value must be non-negative and finite");
    switch (unit) {
        case TimeUnit::t:
            return value;
        case TimeUnit::tl:
            if (c.lambda == 0.0) throw DomainError("time unit tl undefined at lambda = 0");
            return value / c.lambda;
        case TimeUnit::tw:
            return value / c.omega;
        case TimeUnit::gt: {
            const double g = effective_rate(c);
            if (g == 0.0) throw DomainError("time unit gt undefined at resonance");
            return value / g;
        }
    }
    throw DomainError("unreachable time unit");
}

static void validate_axis(const Axis& a) {
    if (a.steps < 2) throw DomainError("axis '" + a.name + "': steps must be >= 2");
    if (!(a.min < a.max)) throw DomainError("axis '" + a.name + "': min must be < max");
    if (!std::isfinite(a.min) || !std::isfinite(a.max))
        throw DomainError("axis '" + a.name + "': bounds must be finite");
}

void validate(const GridSpec& g) {
    validate_axis(g.axis1);
    validate_axis(g.axis2);
    const std::string amp = g.family == StateFamily::pcs ? "r" : "zmag";
    if (g.axis1.name != amp)
        throw DomainError("axis1 must be '" + amp + "' for family " + to_string(g.family));
    if (g.axis2.name != "phi") throw DomainError("axis2 must be 'phi'");
    if (g.family == StateFamily::bgcs && g.axis1.min < 0.0)
        throw DomainError("zmag axis must be non-negative");
    validate(coupling_of(g));
    const double k = fixed_param(g, "k");
    if (!(k > 0.0)) throw DomainError("fixed parameter k must be positive");
    resolve_time(coupling_of(g), g.time_value, g.time_unit);
}

CouplingParams coupling_of(const GridSpec& g) {
    CouplingParams c;
    c.omega = fixed_param(g, "omega");
    c.lambda = fixed_param(g, "lambda");
    return c;
}

double fixed_param(const GridSpec& g, const std::string& name) {
    const auto it = g.fixed.find(name);
    if (it == g.fixed.end()) throw DomainError("missing fixed parameter '" + name + "'");
    return it->second;
}

}  // namespace su11
