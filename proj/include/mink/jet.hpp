#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "mink/error.hpp"

namespace mink {

/// Truncated Taylor expansion of order 4 at a point: c[k] = f^(k)(t0)/k!.
/// Fixed order; third derivatives of frame scalars are the deepest need
/// anywhere in the toolkit, order 4 leaves one in reserve.
struct Jet {
    static constexpr int order = 4;
    std::array<double, 5> c{};

    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet variable(double v) {
        Jet j;
        j.c[0] = v;
        j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
};

inline Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= Jet::order; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}
inline Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= Jet::order; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}
inline Jet operator-(const Jet& a) {
    Jet r;
    for (int k = 0; k <= Jet::order; ++k) r.c[k] = -a.c[k];
    return r;
}
inline Jet operator+(const Jet& a, double s) { Jet r = a; r.c[0] += s; return r; }
inline Jet operator+(double s, const Jet& a) { return a + s; }
inline Jet operator-(const Jet& a, double s) { Jet r = a; r.c[0] -= s; return r; }
inline Jet operator-(double s, const Jet& a) { return -a + s; }

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k <= Jet::order; ++k) {
        double acc = 0;
        for (int j = 0; j <= k; ++j) acc += a.c[j] * b.c[k - j];
        r.c[k] = acc;
    }
    return r;
}
inline Jet operator*(double s, const Jet& a) {
    Jet r;
    for (int k = 0; k <= Jet::order; ++k) r.c[k] = s * a.c[k];
    return r;
}
inline Jet operator*(const Jet& a, double s) { return s * a; }

inline Jet operator/(const Jet& a, const Jet& b) {
    if (std::fabs(b.c[0]) <= tol::div_tol)
        raise(Err::DivisionNearZero, "jet division by near-zero value");
    Jet q;
    for (int k = 0; k <= Jet::order; ++k) {
        double acc = a.c[k];
        for (int j = 0; j < k; ++j) acc -= q.c[j] * b.c[k - j];
        q.c[k] = acc / b.c[0];
    }
    return q;
}
inline Jet operator/(const Jet& a, double s) { return a / Jet::constant(s); }
inline Jet operator/(double s, const Jet& a) { return Jet::constant(s) / a; }

/// k-th derivative value, k! * c[k].
inline double derivative(const Jet& a, int k) {
    if (k < 0 || k > Jet::order)
        raise(Err::OrderExceeded, "jet carries derivatives up to order 4");
    static const double fact[5] = {1, 1, 2, 6, 24};
    return a.c[k] * fact[k];
}

namespace detail {
/// Compose the univariate Taylor coefficients fd (of f at a.c[0]) with the
/// fluctuation of a. Exact at the truncation order.
inline Jet compose(const Jet& a, const std::array<double, 5>& fd) {
    Jet h = a;
    h.c[0] = 0.0;
    Jet acc = Jet::constant(fd[Jet::order]);
    for (int k = Jet::order - 1; k >= 0; --k) acc = acc * h + fd[k];
    return acc;
}
}  // namespace detail

inline Jet sin(const Jet& a) {
    const double s = std::sin(a.c[0]), c = std::cos(a.c[0]);
    return detail::compose(a, {s, c, -s / 2, -c / 6, s / 24});
}
inline Jet cos(const Jet& a) {
    const double s = std::sin(a.c[0]), c = std::cos(a.c[0]);
    return detail::compose(a, {c, -s, -c / 2, s / 6, c / 24});
}
inline Jet sinh(const Jet& a) {
    const double s = std::sinh(a.c[0]), c = std::cosh(a.c[0]);
    return detail::compose(a, {s, c, s / 2, c / 6, s / 24});
}
inline Jet cosh(const Jet& a) {
    const double s = std::sinh(a.c[0]), c = std::cosh(a.c[0]);
    return detail::compose(a, {c, s, c / 2, s / 6, c / 24});
}
inline Jet exp(const Jet& a) {
    const double e = std::exp(a.c[0]);
    return detail::compose(a, {e, e, e / 2, e / 6, e / 24});
}
inline Jet log(const Jet& a) {
    const double v = a.c[0];
    if (v <= tol::fn_tol) raise(Err::DomainError, "log requires a positive argument");
    return detail::compose(a, {std::log(v), 1 / v, -1 / (2 * v * v),
                               1 / (3 * v * v * v), -1 / (4 * v * v * v * v)});
}
inline Jet sqrt(const Jet& a) {
    const double v = a.c[0];
    if (v <= tol::fn_tol) raise(Err::DomainError, "sqrt requires a positive argument");
    const double r = std::sqrt(v);
    return detail::compose(a, {r, r / (2 * v), -r / (8 * v * v),
                               r / (16 * v * v * v), -5 * r / (128 * v * v * v * v)});
}
inline Jet tan(const Jet& a) {
    if (std::fabs(std::cos(a.c[0])) <= tol::fn_tol)
        raise(Err::DomainError, "tan evaluated too close to a pole");
    return sin(a) / cos(a);
}
inline Jet tanh(const Jet& a) { return sinh(a) / cosh(a); }

/// a^p for a real constant exponent. Integer exponents reduce to repeated
/// multiplication and are valid for any base; real exponents need a > 0.
inline Jet pow_const(const Jet& a, double p) {
    const double pr = std::round(p);
    if (std::fabs(p - pr) < 1e-12 && std::fabs(pr) <= 64) {
        int n = static_cast<int>(pr);
        if (n == 0) return Jet::constant(1.0);
        const bool inv = n < 0;
        n = inv ? -n : n;
        Jet acc = Jet::constant(1.0);
        Jet base = a;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return inv ? Jet::constant(1.0) / acc : acc;
    }
    const double v = a.c[0];
    if (v <= tol::fn_tol)
        raise(Err::DomainError, "non-integer power requires a positive base");
    std::array<double, 5> fd;
    double coef = 1.0;
    for (int k = 0; k <= Jet::order; ++k) {
        fd[k] = coef * std::pow(v, p - k);
        coef *= (p - k) / (k + 1);
    }
    return detail::compose(a, fd);
}

inline std::ostream& operator<<(std::ostream& os, const Jet& j) {
    os << "[" << j.c[0];
    for (int k = 1; k <= Jet::order; ++k) os << ", " << j.c[k];
    return os << "]";
}

}  // namespace mink
