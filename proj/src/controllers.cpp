#include "blowlab/controllers.hpp"

namespace blowlab {

std::vector<double> Controller::control_values(const Field& field, const ProblemSpec&) const {
    return std::vector<double>(field.values.size(), 0.0);
}

void PowerFeedback::substep(Field& field, const ProblemSpec& spec, double dt) const {
    const double p = spec.exponent;
    const double pm1 = p - 1.0;
    const int n = spec.grid_points;
    for (int i = 1; i + 1 < n; ++i) {
        if (!in_actuator(spec, i)) continue;
        double& y = field.values[i];
        if (y == 0.0) continue;
        const double denom = 1.0 - pm1 * std::pow(std::abs(y), pm1) * dt;
        if (denom <= 0.0)
            throw StepRejected("nonlinear flow crossed blowup within the step");
        y *= std::pow(denom, -1.0 / pm1);
    }
    field.clamp_dirichlet();
}

std::vector<double> PowerFeedback::control_values(const Field& field,
                                                  const ProblemSpec& spec) const {
    const double pm1 = spec.exponent - 1.0;
    std::vector<double> u(field.values.size(), 0.0);
    for (int i = 0; i < spec.grid_points; ++i)
        if (in_actuator(spec, i)) {
            const double y = field.values[i];
            u[i] = std::pow(std::abs(y), pm1) * y;
        }
    return u;
}

void GainFeedback::substep(Field& field, const ProblemSpec& spec, double dt) const {
    const double factor = std::exp(gain_ * dt);
    const int n = spec.grid_points;
    for (int i = 1; i + 1 < n; ++i)
        if (in_actuator(spec, i)) field.values[i] *= factor;
    field.clamp_dirichlet();
}

std::vector<double> GainFeedback::control_values(const Field& field,
                                                 const ProblemSpec& spec) const {
    std::vector<double> u(field.values.size(), 0.0);
    for (int i = 0; i < spec.grid_points; ++i)
        if (in_actuator(spec, i)) u[i] = gain_ * field.values[i];
    return u;
}

void FunctionControl::substep(Field& field, const ProblemSpec& spec, double dt) const {
    const int n = spec.grid_points;
    for (int i = 1; i + 1 < n; ++i)
        if (in_actuator(spec, i)) field.values[i] += dt * law_(spec.node(i), field.time);
    field.clamp_dirichlet();
}

std::vector<double> FunctionControl::control_values(const Field& field,
                                                    const ProblemSpec& spec) const {
    std::vector<double> u(field.values.size(), 0.0);
    for (int i = 0; i < spec.grid_points; ++i)
        if (in_actuator(spec, i)) u[i] = law_(spec.node(i), field.time);
    return u;
}

}  // namespace blowlab
