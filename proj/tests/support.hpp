#pragma once

// Test-only oracles, independent of the jet/darboux implementation paths
// they are used to check:
//  - high-order central finite differences for derivatives,
//  - a truncated-series integrator for the frame derivative equations,
//    producing framed curves with prescribed kg, kn, taug.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "mink/frames.hpp"

namespace testsup {

using mink::FramedCurve;
using mink::Jet;
using mink::JVec3;

// ---------------------------------------------------------------------------
// finite differences (order-4 stencils, Richardson where needed)
// ---------------------------------------------------------------------------

inline double fd1(const std::function<double(double)>& f, double x, double h) {
    return (8 * (f(x + h) - f(x - h)) - (f(x + 2 * h) - f(x - 2 * h))) / (12 * h);
}

inline double fd2(const std::function<double(double)>& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12 * h * h);
}

inline double fd3(const std::function<double(double)>& f, double x, double h) {
    auto d3 = [&](double hh) {
        return (f(x + 2 * hh) - 2 * f(x + hh) + 2 * f(x - hh) - f(x - 2 * hh)) /
               (2 * hh * hh * hh);
    };
    return (4 * d3(h / 2) - d3(h)) / 3;
}

/// One Richardson level on an even-error-series stencil of leading order p.
inline double richardson(const std::function<double(double)>& stencil, double h, int p) {
    const double f = std::pow(2.0, p);
    return (f * stencil(h / 2) - stencil(h)) / (f - 1);
}

inline double fd_deriv(const std::function<double(double)>& f, double x, int k,
                       double h = 1e-2) {
    switch (k) {
        case 0:
            return f(x);
        case 1:
            return richardson([&](double hh) { return fd1(f, x, hh); }, h, 4);
        case 2:
            return richardson([&](double hh) { return fd2(f, x, hh); }, h, 4);
        default:
            // fd3 is already one level above the O(h^2) stencil
            return richardson([&](double hh) { return fd3(f, x, hh); }, h, 4);
    }
}

// ---------------------------------------------------------------------------
// truncated power series in the arc length s
// ---------------------------------------------------------------------------

constexpr int kSeriesOrder = 28;  // coefficients 0..27

using Series = std::array<double, kSeriesOrder>;

inline Series szero() { return Series{}; }

inline Series sconst(double v) {
    Series s{};
    s[0] = v;
    return s;
}

inline Series sadd(const Series& a, const Series& b) {
    Series r;
    for (int i = 0; i < kSeriesOrder; ++i) r[i] = a[i] + b[i];
    return r;
}

inline Series sscale(double k, const Series& a) {
    Series r;
    for (int i = 0; i < kSeriesOrder; ++i) r[i] = k * a[i];
    return r;
}

inline Series smul(const Series& a, const Series& b) {
    Series r{};
    for (int i = 0; i < kSeriesOrder; ++i)
        for (int j = 0; i + j < kSeriesOrder; ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline double conv_at(const Series& a, const Series& b, int k) {
    double acc = 0;
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    return acc;
}

/// sinh and cosh of a linear function th0 + th1 * s as series.
inline void linear_trig(double th0, double th1, Series& sh, Series& ch) {
    double p = 1.0;
    for (int k = 0; k < kSeriesOrder; ++k) {
        if (k % 2 == 0) {
            sh[k] = std::sinh(th0) * p;
            ch[k] = std::cosh(th0) * p;
        } else {
            sh[k] = std::cosh(th0) * p;
            ch[k] = std::sinh(th0) * p;
        }
        p *= th1 / (k + 1);
    }
}

struct SeriesFrame {
    std::array<Series, 3> x, T, g, n;
};

/// Frame signature cases: 1a with a spacelike curve, 1a with a timelike
/// curve, 1b (spacelike surface).
enum class FrameCase { TimelikeSurfaceSpacelikeCurve, TimelikeSurfaceTimelikeCurve, SpacelikeSurface };

/// Integrate the frame derivative equations coefficient-by-coefficient for
/// prescribed kg(s), kn(s), taug(s). Exact at the truncation order, and
/// entirely independent of the jet machinery.
inline SeriesFrame integrate_frame(FrameCase fcase, const Series& kg,
                                   const Series& kn, const Series& taug) {
    SeriesFrame F;
    std::array<double, 3> T0, g0, n0;
    double eps = 1;
    switch (fcase) {
        case FrameCase::TimelikeSurfaceSpacelikeCurve:
            T0 = {0, 1, 0}; g0 = {-1, 0, 0}; n0 = {0, 0, 1}; eps = 1;
            break;
        case FrameCase::TimelikeSurfaceTimelikeCurve:
            T0 = {1, 0, 0}; g0 = {0, -1, 0}; n0 = {0, 0, 1}; eps = -1;
            break;
        case FrameCase::SpacelikeSurface:
            T0 = {0, 1, 0}; g0 = {0, 0, -1}; n0 = {1, 0, 0}; eps = 1;
            break;
    }
    for (int i = 0; i < 3; ++i) {
        F.x[i] = szero();
        F.T[i] = szero(); F.T[i][0] = T0[i];
        F.g[i] = szero(); F.g[i][0] = g0[i];
        F.n[i] = szero(); F.n[i][0] = n0[i];
    }
    const bool spaceline_surface = fcase == FrameCase::SpacelikeSurface;
    for (int k = 0; k + 1 < kSeriesOrder; ++k) {
        for (int i = 0; i < 3; ++i) {
            double dT, dg, dn;
            if (!spaceline_surface) {
                dT = conv_at(kg, F.g[i], k) - eps * conv_at(kn, F.n[i], k);
                dg = conv_at(kg, F.T[i], k) + eps * conv_at(taug, F.n[i], k);
                dn = conv_at(kn, F.T[i], k) + conv_at(taug, F.g[i], k);
            } else {
                dT = conv_at(kg, F.g[i], k) + conv_at(kn, F.n[i], k);
                dg = -conv_at(kg, F.T[i], k) + conv_at(taug, F.n[i], k);
                dn = conv_at(kn, F.T[i], k) + conv_at(taug, F.g[i], k);
            }
            F.T[i][k + 1] = dT / (k + 1);
            F.g[i][k + 1] = dg / (k + 1);
            F.n[i][k + 1] = dn / (k + 1);
            F.x[i][k + 1] = F.T[i][k] / (k + 1);
        }
    }
    return F;
}

/// Compose a series with t(u) = u * (1 + c2 u + c3 u^2), for non-unit-speed
/// variants of the generated curves.
inline Series scompose_poly(const Series& a, double c2, double c3) {
    Series t{};
    t[1] = 1; t[2] = c2; t[3] = c3;
    Series acc = sconst(a[kSeriesOrder - 1]);
    for (int k = kSeriesOrder - 2; k >= 0; --k) {
        acc = smul(acc, t);
        acc[0] += a[k];
    }
    return acc;
}

inline Jet eval_series_jet(const Series& a, double t0) {
    Jet t = Jet::variable(t0);
    Jet acc = Jet::constant(a[kSeriesOrder - 1]);
    for (int k = kSeriesOrder - 2; k >= 0; --k) acc = acc * t + a[k];
    return acc;
}

inline FramedCurve framed_from_series(const std::array<Series, 3>& x,
                                      const std::array<Series, 3>& n,
                                      double lo, double hi) {
    FramedCurve fc;
    fc.t_lo = lo;
    fc.t_hi = hi;
    fc.position = [x](double t) -> JVec3 {
        return {eval_series_jet(x[0], t), eval_series_jet(x[1], t),
                eval_series_jet(x[2], t)};
    };
    fc.normal_raw = [n](double t) -> JVec3 {
        return {eval_series_jet(n[0], t), eval_series_jet(n[1], t),
                eval_series_jet(n[2], t)};
    };
    return fc;
}

/// Random low-degree polynomial scalar with coefficients in [-b, b].
inline Series random_scalar(std::mt19937_64& rng, double b, int degree = 3,
                            double offset = 0) {
    std::uniform_real_distribution<double> u(-b, b);
    Series s{};
    s[0] = offset + u(rng);
    for (int k = 1; k <= degree; ++k) s[k] = u(rng);
    return s;
}

/// The partner pair with both curves asymptotic: on a spacelike surface,
/// prescribe kn = 0, kg = sinh(th)^2/lambda, taug = sinh(th)cosh(th)/lambda
/// for a linear th(s). The offset x1 = x - lambda*g framed by n1 = g then
/// has kn1 = 0 as well.
struct AsymptoticPair {
    FramedCurve x1;
    double lambda;
};

inline AsymptoticPair make_asymptotic_partner(double lambda, double th0, double th1,
                                              double lo, double hi) {
    Series sh, ch;
    linear_trig(th0, th1, sh, ch);
    const Series kg = sscale(1.0 / lambda, smul(sh, sh));
    const Series taug = sscale(1.0 / lambda, smul(sh, ch));
    const SeriesFrame F = integrate_frame(FrameCase::SpacelikeSurface, kg, szero(), taug);
    std::array<Series, 3> x1, n1;
    for (int i = 0; i < 3; ++i) {
        x1[i] = sadd(F.x[i], sscale(-lambda, F.g[i]));
        n1[i] = F.g[i];
    }
    AsymptoticPair P;
    P.x1 = framed_from_series(x1, n1, lo, hi);
    P.x1.label = "asymptotic_partner";
    P.lambda = lambda;
    return P;
}

}  // namespace testsup
