#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace blowlab {

struct Interval {
    double left = 0.0;
    double right = 0.0;

    double length() const { return right - left; }
    bool contains(double x) const { return x >= left && x <= right; }
    bool contains(const Interval& other) const {
        return other.left >= left && other.right <= right;
    }
};

/// Scenario flavor: the construction scenarios require a in the actuator
/// window, Theorem-1.2 scenarios intentionally place it outside.
enum class ScenarioKind { Construction, Localization };

/// Problem data: domain, actuator window, blowup target (a, T), exponent p
/// and the construction constants. s0 = -log(T) is always derived.
struct ProblemSpec {
    Interval domain;            // full spatial domain
    Interval actuator;          // control window, subset of domain
    double target_point = 0.0;  // a
    double target_time = 0.05;  // T
    double exponent = 2.0;      // p
    double eps0 = 0.2;
    double K0 = 2.0;
    double A_const = 20.0;
    double eta0 = 0.5;
    double T1 = 0.0125;
    int grid_points = 513;      // node count including both endpoints

    double s0() const { return -std::log(target_time); }
    double dx() const { return domain.length() / (grid_points - 1); }
    double kappa() const { return std::pow(exponent - 1.0, -1.0 / (exponent - 1.0)); }
    double node(int i) const { return domain.left + i * dx(); }

    bool actuator_covers_target_ball() const {
        return actuator.contains({target_point - 2.0 * eps0, target_point + 2.0 * eps0});
    }

    void validate(ScenarioKind kind = ScenarioKind::Construction) const {
        if (domain.length() <= 0.0) throw std::invalid_argument("domain is empty");
        if (!domain.contains(actuator)) throw std::invalid_argument("actuator not inside domain");
        if (!domain.contains(target_point)) throw std::invalid_argument("target point outside domain");
        if (target_time <= 0.0) throw std::invalid_argument("target time must be positive");
        if (exponent <= 1.0) throw std::invalid_argument("exponent must exceed 1");
        if (eps0 <= 0.0) throw std::invalid_argument("eps0 must be positive");
        if (K0 < 1.0) throw std::invalid_argument("K0 must be >= 1");
        if (A_const < 1.0) throw std::invalid_argument("A must be >= 1");
        if (eta0 <= 0.0 || eta0 > 1.0) throw std::invalid_argument("eta0 must lie in (0,1]");
        if (grid_points < 3) throw std::invalid_argument("need at least 3 grid points");
        if (!(T1 > 0.0 && T1 < target_time / 2.0))
            throw std::invalid_argument("T1 must lie in (0, T/2)");
        if (kind == ScenarioKind::Construction && !actuator_covers_target_ball())
            throw std::invalid_argument("(a-2eps0, a+2eps0) not inside actuator window");
    }
};

/// Spatial samples of y(.,t) on the uniform grid, Dirichlet ends.
struct Field {
    std::vector<double> values;
    double time = 0.0;
    double dx = 0.0;

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    bool finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
    void clamp_dirichlet() {
        if (!values.empty()) {
            values.front() = 0.0;
            values.back() = 0.0;
        }
    }
};

inline Field make_field(const ProblemSpec& spec, double t = 0.0) {
    Field f;
    f.values.assign(static_cast<std::size_t>(spec.grid_points), 0.0);
    f.time = t;
    f.dx = spec.dx();
    return f;
}

struct BlowupEstimate {
    double t_est = 0.0;
    double a_est = 0.0;
    double rate_exponent = 0.0;
};

enum class TerminationReason { TimeEnd, YMaxReached, ExternalPredicate, NonFinite };

inline const char* to_string(TerminationReason r) {
    switch (r) {
        case TerminationReason::TimeEnd: return "t_end";
        case TerminationReason::YMaxReached: return "Y_max reached";
        case TerminationReason::ExternalPredicate: return "external predicate";
        case TerminationReason::NonFinite: return "non-finite value";
    }
    return "unknown";
}

struct Trajectory {
    std::vector<Field> snapshots;
    TerminationReason reason = TerminationReason::TimeEnd;
    std::string diagnostic;
};

}  // namespace blowlab
