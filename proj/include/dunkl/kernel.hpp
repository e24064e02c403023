#pragma once

#include <memory>

#include "dunkl/polynomial.hpp"

namespace dunkl {

// The Dunkl kernel E(x,y). Closed forms for rank-one and Z2^N products,
// truncated homogeneous series for every other reflection group.
//
// Rank-one closed form with multiplicity k:
//   E(a,b)  = e^{ab} 1F1(k, 2k+1, -2ab)                        (real b)
//   E(a,ib) = j_{k-1/2}(ab) + i ab/(2k+1) j_{k+1/2}(ab)        (imaginary b)
// where j_nu is the normalized Bessel function. The real branch is evaluated
// through the log-scaled Kummer series so arguments far beyond the naive
// series radius stay finite.
class KernelEvaluator {
public:
    enum class Mode { Rank1Closed, ProductClosed, Series };

    explicit KernelEvaluator(std::shared_ptr<const RootSystem> rs, int series_nmax = 24,
                             double series_radius = 6.0);

    Mode mode() const { return mode_; }
    const RootSystem& rs() const { return *rs_; }
    int series_nmax() const { return nmax_; }

    // E(x,y), real arguments (positive; may overflow for huge <x,y> -- use
    // log_real for kernel-scale work).
    double real_kernel(const Vec& x, const Vec& y) const;
    double log_real_kernel(const Vec& x, const Vec& y) const;

    // E(x, i y) for real x, y.
    Cplx imag_kernel(const Vec& x, const Vec& y) const;

    // E(x, z) for complex z; series mode everywhere inside its radius, closed
    // modes route through the real/imaginary fast paths when z is purely real
    // or purely imaginary and fall back to 1F1 otherwise.
    Cplx kernel(const Vec& x, const std::vector<Cplx>& z) const;

    // homogeneous component E_n(.,y) as a polynomial tensor (series cache);
    // exposed for the coefficient-level defining-system tests
    struct SeriesBlock {
        std::vector<Polynomial::Index> xmono;  // degree-n monomials
        std::vector<Polynomial::Index> ymono;
        std::vector<double> coeff;  // row-major [xmono][ymono]
    };
    const SeriesBlock& series_block(int n) const;

private:
    void build_series();
    Cplx series_eval(const Vec& x, const std::vector<Cplx>& z) const;

    std::shared_ptr<const RootSystem> rs_;
    Mode mode_;
    int nmax_;
    double radius_;
    std::vector<SeriesBlock> blocks_;
};

// rank-one factor helpers (also used by the transform plans)
double rank1_log_real_kernel(double k, double s);          // log E_k at s = a*b
Cplx rank1_imag_kernel(double k, double s);                // E_k(a, ib) at s = a*b

struct KernelBoundRow {
    Vec x, y;
    double value;        // E(x,y)
    double lower_ratio;  // E / lower envelope
    double upper_ratio;  // E / upper envelope
};

struct KernelBoundReport {
    double fitted_c;  // gaussian rate in both envelopes
    double min_lower_ratio, max_lower_ratio;
    double min_upper_ratio, max_upper_ratio;
    double max_imag_modulus;    // max over sweep of |E(ix,y)|
    double max_ginvariance_err; // max over sweep, sigma of |E(sx,sy)-E(x,y)|
    bool all_positive;
    std::vector<KernelBoundRow> rows;
};

// Sweep report for the two-sided kernel bounds: envelopes
//   w(B(x,1))^{-1} e^{(|x|^2+|y|^2)/2} e^{-c |x-y|^2}   (lower)
//   w(B(x,1))^{-1} e^{(|x|^2+|y|^2)/2} e^{-d(x,y)^2/c}  (upper)
// with a single c fitted per run.
KernelBoundReport kernel_bound_report(const KernelEvaluator& ev,
                                      const std::vector<std::pair<Vec, Vec>>& sweep);

}  // namespace dunkl
