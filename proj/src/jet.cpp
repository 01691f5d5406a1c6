#include "rectifynd/jet.hpp"

#include <array>
#include <cmath>
#include <string>

namespace rectifynd {

namespace {

void check_finite(const std::vector<double>& d) {
    for (double x : d) {
        if (!std::isfinite(x)) throw DomainError("jet holds a non-finite derivative");
    }
}

void check_centers(const Jet& a, const Jet& b) {
    const double scale = std::max({1.0, std::fabs(a.center()), std::fabs(b.center())});
    if (std::fabs(a.center() - b.center()) > 1e-9 * scale) {
        throw CenterMismatch("jet centers differ: " + std::to_string(a.center()) + " vs " +
                             std::to_string(b.center()));
    }
}

} // namespace

double binomial(int n, int k) {
    static const auto table = [] {
        constexpr int N = 2 * kMaxJetOrder + 1;
        std::array<std::array<double, N>, N> c{};
        for (int i = 0; i < N; ++i) {
            c[i][0] = 1.0;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j < i ? c[i - 1][j] : 0.0);
        }
        return c;
    }();
    return table[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Jet::Jet(double center, std::vector<double> derivs) : center_(center), d_(std::move(derivs)) {
    if (d_.empty() || static_cast<int>(d_.size()) - 1 > kMaxJetOrder)
        throw OrderTooLow("jet order must be in [0, " + std::to_string(kMaxJetOrder) + "]");
    check_finite(d_);
}

Jet Jet::constant(double value, int order, double center) {
    std::vector<double> d(static_cast<size_t>(order) + 1, 0.0);
    d[0] = value;
    return Jet(center, std::move(d));
}

Jet Jet::variable(double value, int order) {
    std::vector<double> d(static_cast<size_t>(order) + 1, 0.0);
    d[0] = value;
    if (order >= 1) d[1] = 1.0;
    return Jet(value, std::move(d));
}

Jet Jet::linear(double value, double slope, int order, double center) {
    std::vector<double> d(static_cast<size_t>(order) + 1, 0.0);
    d[0] = value;
    if (order >= 1) d[1] = slope;
    return Jet(center, std::move(d));
}

double Jet::deriv(int k) const {
    if (k < 0 || k > order())
        throw OrderTooLow("derivative order " + std::to_string(k) + " exceeds jet order " +
                          std::to_string(order()));
    return d_[static_cast<size_t>(k)];
}

Jet Jet::truncated(int order) const {
    if (order > this->order()) throw OrderTooLow("cannot truncate upward");
    std::vector<double> d(d_.begin(), d_.begin() + order + 1);
    return Jet(center_, std::move(d));
}

Jet operator+(const Jet& a, const Jet& b) {
    check_centers(a, b);
    const int m = std::min(a.order(), b.order());
    std::vector<double> d(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) d[static_cast<size_t>(k)] = a.deriv(k) + b.deriv(k);
    return Jet(a.center(), std::move(d));
}

Jet operator-(const Jet& a, const Jet& b) {
    check_centers(a, b);
    const int m = std::min(a.order(), b.order());
    std::vector<double> d(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) d[static_cast<size_t>(k)] = a.deriv(k) - b.deriv(k);
    return Jet(a.center(), std::move(d));
}

Jet operator*(const Jet& a, const Jet& b) {
    check_centers(a, b);
    const int m = std::min(a.order(), b.order());
    std::vector<double> d(static_cast<size_t>(m) + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += binomial(k, j) * a.deriv(j) * b.deriv(k - j);
        d[static_cast<size_t>(k)] = acc;
    }
    return Jet(a.center(), std::move(d));
}

Jet operator-(const Jet& a) { return a * -1.0; }

Jet operator*(const Jet& a, double s) {
    std::vector<double> d = a.derivs();
    for (double& x : d) x *= s;
    return Jet(a.center(), std::move(d));
}

Jet operator*(double s, const Jet& a) { return a * s; }

Jet operator+(const Jet& a, double s) {
    std::vector<double> d = a.derivs();
    d[0] += s;
    return Jet(a.center(), std::move(d));
}

Jet operator+(double s, const Jet& a) { return a + s; }
Jet operator-(const Jet& a, double s) { return a + (-s); }

Jet reciprocal(const Jet& a, double eps_div) {
    if (std::fabs(a.value()) <= eps_div)
        throw DivisionNearZero("reciprocal of jet with |value| = " + std::to_string(std::fabs(a.value())));
    const int m = a.order();
    std::vector<double> r(static_cast<size_t>(m) + 1);
    r[0] = 1.0 / a.value();
    for (int k = 1; k <= m; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += binomial(k, j) * a.deriv(j) * r[static_cast<size_t>(k - j)];
        r[static_cast<size_t>(k)] = -acc / a.value();
    }
    return Jet(a.center(), std::move(r));
}

Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

Jet jet_sqrt(const Jet& a, double eps_div) {
    if (!(a.value() > eps_div))
        throw DomainError("jet_sqrt requires value > eps_div, got " + std::to_string(a.value()));
    const int m = a.order();
    std::vector<double> b(static_cast<size_t>(m) + 1);
    b[0] = std::sqrt(a.value());
    for (int k = 1; k <= m; ++k) {
        double acc = a.deriv(k);
        for (int j = 1; j < k; ++j) acc -= binomial(k, j) * b[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
        b[static_cast<size_t>(k)] = acc / (2.0 * b[0]);
    }
    return Jet(a.center(), std::move(b));
}

std::pair<Jet, Jet> jet_sincos(const Jet& a) {
    const int m = a.order();
    std::vector<double> s(static_cast<size_t>(m) + 1), c(static_cast<size_t>(m) + 1);
    s[0] = std::sin(a.value());
    c[0] = std::cos(a.value());
    // (sin a)^(k+1) = d^k(cos(a) a'), (cos a)^(k+1) = -d^k(sin(a) a') via Leibniz.
    for (int k = 0; k < m; ++k) {
        double ds = 0.0, dc = 0.0;
        for (int j = 0; j <= k; ++j) {
            const double bc = binomial(k, j) * a.deriv(k + 1 - j);
            ds += bc * c[static_cast<size_t>(j)];
            dc += bc * s[static_cast<size_t>(j)];
        }
        s[static_cast<size_t>(k + 1)] = ds;
        c[static_cast<size_t>(k + 1)] = -dc;
    }
    return {Jet(a.center(), std::move(s)), Jet(a.center(), std::move(c))};
}

Jet jet_sin(const Jet& a) { return jet_sincos(a).first; }
Jet jet_cos(const Jet& a) { return jet_sincos(a).second; }

Jet jet_tan(const Jet& a, double eps_div) {
    auto [s, c] = jet_sincos(a);
    if (std::fabs(c.value()) <= eps_div) throw DomainError("jet_tan at a pole of tan");
    return s * reciprocal(c, eps_div);
}

Jet jet_sec(const Jet& a, double eps_div) {
    const Jet c = jet_cos(a);
    if (std::fabs(c.value()) <= eps_div)
        throw DomainError("jet_sec near a pole: |cos| = " + std::to_string(std::fabs(c.value())));
    return reciprocal(c, eps_div);
}

Jet jet_powi(const Jet& a, int k) {
    if (k < 0) throw DomainError("jet_powi requires a non-negative exponent");
    Jet out = Jet::constant(1.0, a.order(), a.center());
    for (int i = 0; i < k; ++i) out = out * a;
    return out;
}

Jet derivative(const Jet& a) {
    if (a.order() < 1) throw OrderTooLow("cannot differentiate an order-0 jet");
    std::vector<double> d(a.derivs().begin() + 1, a.derivs().end());
    return Jet(a.center(), std::move(d));
}

JetVector::JetVector(std::vector<Jet> components) : comps_(std::move(components)) {
    if (comps_.size() < 2) throw DomainError("JetVector dimension must be >= 2");
    for (const auto& c : comps_) {
        if (c.order() != comps_[0].order())
            throw OrderTooLow("JetVector components must share one order");
        if (c.center() != comps_[0].center())
            throw CenterMismatch("JetVector components must share one center");
    }
}

std::vector<double> JetVector::values() const {
    std::vector<double> v(comps_.size());
    for (size_t i = 0; i < comps_.size(); ++i) v[i] = comps_[i].value();
    return v;
}

JetVector operator+(const JetVector& a, const JetVector& b) {
    std::vector<Jet> out;
    out.reserve(static_cast<size_t>(a.dimension()));
    for (int i = 0; i < a.dimension(); ++i) out.push_back(a[i] + b[i]);
    return JetVector(std::move(out));
}

JetVector operator-(const JetVector& a, const JetVector& b) {
    std::vector<Jet> out;
    out.reserve(static_cast<size_t>(a.dimension()));
    for (int i = 0; i < a.dimension(); ++i) out.push_back(a[i] - b[i]);
    return JetVector(std::move(out));
}

JetVector operator*(const JetVector& a, const Jet& s) {
    std::vector<Jet> out;
    out.reserve(static_cast<size_t>(a.dimension()));
    for (int i = 0; i < a.dimension(); ++i) out.push_back(a[i] * s);
    return JetVector(std::move(out));
}

JetVector operator*(const JetVector& a, double s) {
    std::vector<Jet> out;
    out.reserve(static_cast<size_t>(a.dimension()));
    for (int i = 0; i < a.dimension(); ++i) out.push_back(a[i] * s);
    return JetVector(std::move(out));
}

JetVector derivative(const JetVector& a) {
    std::vector<Jet> out;
    out.reserve(static_cast<size_t>(a.dimension()));
    for (int i = 0; i < a.dimension(); ++i) out.push_back(derivative(a[i]));
    return JetVector(std::move(out));
}

Jet dot(const JetVector& a, const JetVector& b) {
    if (a.dimension() != b.dimension()) throw DomainError("dot of mismatched dimensions");
    Jet acc = a[0] * b[0];
    for (int i = 1; i < a.dimension(); ++i) acc = acc + a[i] * b[i];
    return acc;
}

Jet norm_squared(const JetVector& a) { return dot(a, a); }

} // namespace rectifynd
