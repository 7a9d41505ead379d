#ifndef RMFG_CONGESTION_HPP
#define RMFG_CONGESTION_HPP

#include <cstddef>

namespace rmfg {

/// The scalar congestion map F_j(t) = (j^2/2) t^{(alpha-2)/beta} - t, t > 0.
///
/// For j != 0 and 0 <= alpha < 2 the map is strictly decreasing on (0, inf)
/// with range all of R, so it has a unique inverse everywhere. For j = 0 it
/// degenerates to F_0(t) = -t, whose inverse exists only for negative values.
/// Pointwise inversion of this map is what turns the radial Hamilton-Jacobi
/// relation into an explicit density formula.
struct CongestionCurve {
    double alpha = 0.0;  ///< congestion exponent, 0 <= alpha < 2
    double beta = 1.0;   ///< coupling exponent of g(m) = m^beta, > 0
    double j = 0.0;      ///< radial current

    /// Closed-form zero of F_j: t* = (j^2/2)^{beta/(2+beta-alpha)}.
    double zero_crossing() const;
};

/// Validated constructor; throws std::invalid_argument outside the
/// hypotheses (alpha in [0,2), beta > 0).
CongestionCurve make_congestion_curve(double alpha, double beta, double j);

/// F_j(t). Throws std::domain_error for t <= 0.
double eval_Fj(const CongestionCurve& curve, double t);

/// dF_j/dt, strictly negative on (0, inf) for j != 0.
double eval_Fj_derivative(const CongestionCurve& curve, double t);

/// Unique t > 0 with |F_j(t) - y| <= tol * (1 + |y|).
///
/// Brackets geometrically from the closed-form zero, then applies
/// bisection-safeguarded Newton. The derivative of F_j is unbounded as
/// t -> 0+, so a raw Newton iteration from an arbitrary start is unsafe;
/// the bracket keeps every iterate admissible.
///
/// Throws std::domain_error for j = 0 with y >= 0 ("no positive root") and
/// std::runtime_error if bracket expansion fails to straddle y.
double invert_Fj(const CongestionCurve& curve, double y, double tol = 1e-10);

/// sigma = 2 beta (d-1) / (2 + beta - alpha), the r-power that multiplies
/// the Hamilton-Jacobi right-hand side in the reduced scalar relation.
double sigma_exponent(int d, double alpha, double beta);

/// Surface area of the unit sphere in R^d: |dB_1| = 2 pi^{d/2} / Gamma(d/2).
double unit_sphere_area(int d);

}  // namespace rmfg

#endif  // RMFG_CONGESTION_HPP
