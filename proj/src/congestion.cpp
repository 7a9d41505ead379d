#include "rmfg/congestion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rmfg {

double CongestionCurve::zero_crossing() const {
    return std::pow(0.5 * j * j, beta / (2.0 + beta - alpha));
}

CongestionCurve make_congestion_curve(double alpha, double beta, double j) {
    if (!(alpha >= 0.0 && alpha < 2.0)) {
        throw std::invalid_argument("congestion exponent alpha must lie in [0, 2), got " +
                                    std::to_string(alpha));
    }
    if (!(beta > 0.0)) {
        throw std::invalid_argument("coupling exponent beta must be positive, got " +
                                    std::to_string(beta));
    }
    return CongestionCurve{alpha, beta, j};
}

double eval_Fj(const CongestionCurve& c, double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("F_j is defined for t > 0 only");
    }
    if (c.j == 0.0) {
        return -t;
    }
    return 0.5 * c.j * c.j * std::pow(t, (c.alpha - 2.0) / c.beta) - t;
}

double eval_Fj_derivative(const CongestionCurve& c, double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("F_j is defined for t > 0 only");
    }
    if (c.j == 0.0) {
        return -1.0;
    }
    const double p = (c.alpha - 2.0) / c.beta;
    return 0.5 * c.j * c.j * p * std::pow(t, p - 1.0) - 1.0;
}

double invert_Fj(const CongestionCurve& c, double y, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("invert_Fj: tolerance must be positive");
    }
    if (c.j == 0.0) {
        if (y >= 0.0) {
            throw std::domain_error("invert_Fj: F_0(t) = -t has no positive root for y >= 0");
        }
        return -y;
    }

    const double scale = 1.0 + std::fabs(y);
    const double tstar = c.zero_crossing();
    if (!(tstar > 0.0) || !std::isfinite(tstar)) {
        throw std::runtime_error("invert_Fj: zero crossing under/overflows for this (alpha, beta, j)");
    }
    if (y == 0.0) {
        return tstar;
    }

    // F_j is decreasing with F_j(t*) = 0: roots for y > 0 lie below t*,
    // roots for y < 0 above it. Expand geometrically until straddled.
    double lo, hi;
    if (y > 0.0) {
        hi = tstar;
        lo = 0.5 * tstar;
        int k = 0;
        while (eval_Fj(c, lo) < y) {
            lo *= 0.5;
            if (++k > 2100 || lo <= 0.0) {
                throw std::runtime_error("invert_Fj: bracket expansion failed toward 0");
            }
        }
    } else {
        lo = tstar;
        hi = 2.0 * tstar;
        int k = 0;
        while (eval_Fj(c, hi) > y) {
            hi *= 2.0;
            if (++k > 2100 || !std::isfinite(hi)) {
                throw std::runtime_error("invert_Fj: bracket expansion failed toward infinity");
            }
        }
    }

    // Safeguarded Newton: fall back to bisection whenever the Newton step
    // leaves the bracket or fails to reduce the residual.
    double t = 0.5 * (lo + hi);
    double f = eval_Fj(c, t) - y;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::fabs(f) <= tol * scale) {
            return t;
        }
        if (f > 0.0) {
            lo = t;  // F decreasing: residual positive means root is to the right
        } else {
            hi = t;
        }
        const double df = eval_Fj_derivative(c, t);
        double tn = t - f / df;
        if (!(tn > lo && tn < hi)) {
            tn = 0.5 * (lo + hi);
        }
        if (tn == t) {
            return t;  // step underflow: at floating-point resolution
        }
        t = tn;
        f = eval_Fj(c, t) - y;
    }
    if (std::fabs(f) <= tol * scale) {
        return t;
    }
    throw std::runtime_error("invert_Fj: no convergence after iteration cap");
}

double sigma_exponent(int d, double alpha, double beta) {
    const double denom = 2.0 + beta - alpha;
    if (denom == 0.0) {
        throw std::invalid_argument("sigma_exponent: 2 + beta - alpha must be nonzero");
    }
    return 2.0 * beta * (d - 1) / denom;
}

double unit_sphere_area(int d) {
    if (d < 1) {
        throw std::invalid_argument("unit_sphere_area: dimension must be >= 1");
    }
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

}  // namespace rmfg
