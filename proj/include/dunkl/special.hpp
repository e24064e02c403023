#pragma once

#include <functional>

#include "dunkl/common.hpp"

namespace dunkl {

// ---------------------------------------------------------------------------
// Gamma function
// ---------------------------------------------------------------------------

// Gamma(x) for x > 0, relative error below 1e-12 on (0, 170).
// Throws Error("Overflow") for x > 170.
double gamma_fn(double x);

// log Gamma(x), x > 0 (no overflow cap).
double log_gamma(double x);

// Hurwitz zeta(s, a) for real s < 1, a in (0, 2]; Euler-Maclaurin tail.
// Feeds the singular-endpoint quadrature corrections.
double hurwitz_zeta(double s, double a);

// ---------------------------------------------------------------------------
// Confluent hypergeometric 1F1
// ---------------------------------------------------------------------------

// 1F1(a,b,z) by Taylor series; the Kummer transformation
// 1F1(a,b,z) = e^z 1F1(b-a,b,-z) is applied when Re z < 0.
// Throws Error("PoleAtB") when b is a nonpositive integer and
// Error("NotConverged") when |z| exceeds the convergence cap (default 50).
Cplx hyp1f1(double a, double b, Cplx z, double zcap = 50.0);

// log of 1F1(a,b,x) for real x >= 0 and a,b > 0 (the monotone branch used by
// kernel evaluation at large argument; series for small x, Poincare-type
// asymptotics beyond).
double log_hyp1f1_pos(double a, double b, double x);

// ---------------------------------------------------------------------------
// Bessel functions (real order >= -1/2, real argument)
// ---------------------------------------------------------------------------

// Cylindrical J_nu(x).
double bessel_j(double nu, double x);

// Normalized Bessel j_nu(x) = Gamma(nu+1) (2/x)^nu J_nu(x) = 0F1(nu+1; -x^2/4).
// Even in x, j_nu(0) = 1.
double bessel_j_norm(double nu, double x);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

enum class Decay { Gaussian, Exponential, Power };

struct QuadratureRule {
    Vec nodes;
    Vec weights;
    // Descriptor of the domain this rule was generated for.
    double a = -1.0, b = 1.0;
    bool semi_infinite = false;
    Decay decay = Decay::Exponential;
};

// n-point Gauss-Legendre rule on [-1,1].
QuadratureRule gauss_legendre(int n);

// Same rule mapped onto [a,b].
QuadratureRule gauss_legendre(int n, double a, double b);

// Adaptive composite Gauss-Legendre on [a,b]: panels are bisected until the
// two-level difference is below tol (absolute + relative mix). `splits` lists
// interior points where the integrand is non-smooth; panels never straddle
// them.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10, const Vec& splits = {});

// Integral of f over (0, infinity) for integrands with the declared decay.
// Gaussian:   f ~ e^{-c x^2} tail, mapped by truncation at the 1e-16 tail;
// Exponential: f ~ e^{-c x} tail;
// Power:      f ~ x^{-p}, p > 1, handled by the x = u/(1-u) substitution.
// Throws Error("NotConverged") with the best estimate in the message if the
// refinement stalls above tol.
double semi_infinite_quad(const std::function<double(double)>& f, Decay decay,
                          double tol = 1e-8);

}  // namespace dunkl
