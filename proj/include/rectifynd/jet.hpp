#pragma once

#include <utility>
#include <vector>

#include "rectifynd/errors.hpp"

namespace rectifynd {

/// Default absolute threshold below which a divisor (curvature, speed, cosine)
/// is treated as vanishing.
inline constexpr double kEpsDiv = 1e-12;

/// Hard cap on jet order; enough for dimension 15 at the 2n+2 rule.
inline constexpr int kMaxJetOrder = 32;

/// Truncated Taylor jet at a parameter value `center`, storing true derivative
/// values d_k = f^(k)(center) for k = 0..order (not Taylor coefficients d_k/k!).
/// Arithmetic between jets truncates to the smaller order and requires a shared
/// center.
class Jet {
public:
    Jet() : center_(0.0), d_{0.0} {}
    Jet(double center, std::vector<double> derivs);

    /// f == value identically: d = [value, 0, ..., 0].
    static Jet constant(double value, int order, double center = 0.0);
    /// f(t) = t around t = value: d = [value, 1, 0, ..., 0].
    static Jet variable(double value, int order);
    /// f with f(center) = value, f' == slope: d = [value, slope, 0, ..., 0].
    static Jet linear(double value, double slope, int order, double center);

    int order() const noexcept { return static_cast<int>(d_.size()) - 1; }
    double center() const noexcept { return center_; }
    double value() const noexcept { return d_[0]; }
    /// k-th derivative value; k must be <= order().
    double deriv(int k) const;
    const std::vector<double>& derivs() const noexcept { return d_; }

    /// Truncated copy of this jet at a (not larger) order.
    Jet truncated(int order) const;

private:
    double center_;
    std::vector<double> d_;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);   // Leibniz with binomial factors
Jet operator-(const Jet& a);
Jet operator*(const Jet& a, double s);
Jet operator*(double s, const Jet& a);
Jet operator+(const Jet& a, double s);
Jet operator+(double s, const Jet& a);
Jet operator-(const Jet& a, double s);

/// 1/a. Requires |a(center)| > eps_div, else DivisionNearZero.
Jet reciprocal(const Jet& a, double eps_div = kEpsDiv);
Jet operator/(const Jet& a, const Jet& b);

/// sqrt(a). Requires a(center) > eps_div, else DomainError.
Jet jet_sqrt(const Jet& a, double eps_div = kEpsDiv);
/// sin and cos of the same argument, built jointly order by order.
std::pair<Jet, Jet> jet_sincos(const Jet& a);
Jet jet_sin(const Jet& a);
Jet jet_cos(const Jet& a);
Jet jet_tan(const Jet& a, double eps_div = kEpsDiv);
/// sec(a) = 1/cos(a). Requires |cos(a(center))| > eps_div, else DomainError.
Jet jet_sec(const Jet& a, double eps_div = kEpsDiv);
/// a^k for integer k >= 0 by repeated multiplication.
Jet jet_powi(const Jet& a, int k);

/// Jet of f' from the jet of f (one order lower). Order 0 input -> OrderTooLow.
Jet derivative(const Jet& a);

/// Binomial coefficient C(n, k) for n <= 2*kMaxJetOrder.
double binomial(int n, int k);

/// A point of a curve in E^n with derivatives: n component jets sharing center
/// and order.
class JetVector {
public:
    JetVector() = default;
    explicit JetVector(std::vector<Jet> components);

    int dimension() const noexcept { return static_cast<int>(comps_.size()); }
    int order() const { return comps_.at(0).order(); }
    double center() const { return comps_.at(0).center(); }
    const Jet& operator[](int i) const { return comps_[static_cast<size_t>(i)]; }
    Jet& operator[](int i) { return comps_[static_cast<size_t>(i)]; }
    const std::vector<Jet>& components() const noexcept { return comps_; }

    /// Value parts only.
    std::vector<double> values() const;

private:
    std::vector<Jet> comps_;
};

JetVector operator+(const JetVector& a, const JetVector& b);
JetVector operator-(const JetVector& a, const JetVector& b);
JetVector operator*(const JetVector& a, const Jet& s);
JetVector operator*(const JetVector& a, double s);
/// Componentwise derivative.
JetVector derivative(const JetVector& a);
/// Euclidean inner product as a jet.
Jet dot(const JetVector& a, const JetVector& b);
Jet norm_squared(const JetVector& a);

} // namespace rectifynd
