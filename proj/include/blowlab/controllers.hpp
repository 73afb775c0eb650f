#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "blowlab/types.hpp"

namespace blowlab {

/// Thrown by the exact nonlinear substep when the flow denominator drops to
/// zero or below, i.e. the ODE blows up inside the step. Callers shrink dt.
struct StepRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Feedback controller: owns the control substep of the IMEX scheme and can
/// report its control values on the grid for diagnostics/CSV.
class Controller {
public:
    virtual ~Controller() = default;

    /// Advance the control sub-dynamics y' = chi_omega u(y) by dt in place.
    virtual void substep(Field& field, const ProblemSpec& spec, double dt) const = 0;

    /// Control values u(x) at the field's state (diagnostics only).
    virtual std::vector<double> control_values(const Field& field,
                                               const ProblemSpec& spec) const;
};

class ZeroControl final : public Controller {
public:
    void substep(Field&, const ProblemSpec&, double) const override {}
};

/// Phase-2 feedback u = |y|^{p-1} y. Inside the actuator window the substep
/// applies the exact flow y -> y (1 - (p-1)|y|^{p-1} dt)^{-1/(p-1)}.
class PowerFeedback final : public Controller {
public:
    void substep(Field& field, const ProblemSpec& spec, double dt) const override;
    std::vector<double> control_values(const Field& field,
                                       const ProblemSpec& spec) const override;
};

/// Linear gain u = c y; exact substep y -> y e^{c dt} inside the window.
class GainFeedback final : public Controller {
public:
    explicit GainFeedback(double gain) : gain_(gain) {}
    void substep(Field& field, const ProblemSpec& spec, double dt) const override;
    std::vector<double> control_values(const Field& field,
                                       const ProblemSpec& spec) const override;

private:
    double gain_;
};

/// Bounded open-loop law u(x,t) supplied as a function; explicit substep.
class FunctionControl final : public Controller {
public:
    using Law = std::function<double(double x, double t)>;
    explicit FunctionControl(Law law) : law_(std::move(law)) {}
    void substep(Field& field, const ProblemSpec& spec, double dt) const override;
    std::vector<double> control_values(const Field& field,
                                       const ProblemSpec& spec) const override;

private:
    Law law_;
};

inline bool in_actuator(const ProblemSpec& spec, int i) {
    return spec.actuator.contains(spec.node(i));
}

}  // namespace blowlab
