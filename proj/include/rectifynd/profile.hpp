#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "rectifynd/jet.hpp"

namespace rectifynd {

/// One curvature component kappa_i(s) from the closed-form library.
class KappaFunction {
public:
    enum class Kind {
        Constant,              // k
        InverseSqrtQuadratic,  // 1 / sqrt(q2 s^2 + q1 s + q0)
        LinearOverSqrtQuadratic, // (s + offset) / sqrt(q2 s^2 + q1 s + q0)
        SinOverLinear,         // amplitude * sin(omega s + phase) / (s + offset)
        SecLinear              // factor * (s + offset) * sec(omega s + phase)
    };

    static KappaFunction constant(double k);
    static KappaFunction inverse_sqrt_quadratic(double q2, double q1, double q0);
    static KappaFunction linear_over_sqrt_quadratic(double offset, double q2, double q1, double q0);
    static KappaFunction sin_over_linear(double amplitude, double omega, double phase, double offset);
    static KappaFunction sec_linear(double factor, double omega, double phase, double offset);

    Kind kind() const noexcept { return kind_; }
    double value(double s) const;
    Jet jet(double s, int order) const;
    /// True when s is inside the function's own validity region (denominators
    /// and radicands bounded away from zero).
    bool valid_at(double s, double margin = 1e-9) const;

    static KappaFunction from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    Kind kind_ = Kind::Constant;
    // parameter slots, meaning depends on kind
    double p0_ = 0, p1_ = 0, p2_ = 0, p3_ = 0;
};

/// Prescribed curvatures kappa_1..kappa_{n-1} of a curve in E^n over a
/// validity interval in arclength.
struct CurvatureProfile {
    int dimension = 0;
    std::vector<KappaFunction> kappas;   // n-1 entries
    double s_min = 0.0, s_max = 0.0;
    /// The offset c of lambda(s) = s + c this profile was constructed with,
    /// when it came from a rectifying closed form.
    std::optional<double> offset_c;

    /// kappa_i value, 1-based i.
    double kappa(int i, double s) const;
    /// Jets of all curvatures at s.
    std::vector<Jet> jets(double s, int order) const;
    /// Throws DomainError when s lies outside [s_min, s_max] or a kappa is
    /// invalid there.
    void require_valid(double s) const;

    static CurvatureProfile from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

} // namespace rectifynd
