#pragma once

#include <map>

#include "dunkl/root_system.hpp"

namespace dunkl {

// Multi-index polynomial with double coefficients; the exact-algebra substrate
// for Dunkl operators. Coefficients below 1e-14 of the largest are pruned.
class Polynomial {
public:
    using Index = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(int dim) : dim_(dim) {}

    static Polynomial constant(int dim, double c);
    static Polynomial monomial(const Index& idx, double c = 1.0);

    int dim() const { return dim_; }
    const std::map<Index, double>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int degree() const;

    void add_term(const Index& idx, double c);
    double coeff(const Index& idx) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(double s) const;

    double eval(const Vec& x) const;
    Cplx eval(const std::vector<Cplx>& x) const;

    Polynomial derivative(int axis) const;
    Polynomial directional_derivative(const Vec& xi) const;

    // p(M x) for an orthogonal M
    Polynomial compose_linear(const Mat& m) const;

    // exact division by the linear form <alpha, x>; throws
    // Error("NotDivisible") when a nonzero remainder is left behind.
    // `ref_scale` sets the noise floor (defaults to the dividend's own
    // largest coefficient); dividends below the floor divide to zero.
    Polynomial divide_by_linear(const Vec& alpha, double ref_scale = 0.0) const;

    void prune();
    void prune_relative(double scale);
    double max_abs_coeff() const;

private:
    int dim_ = 0;
    std::map<Index, double> terms_;
};

// T_xi p, exact.
Polynomial dunkl_apply_poly(const RootSystem& rs, const Vec& xi, const Polynomial& p);

// Dunkl Laplacian, explicit delta_alpha route.
Polynomial laplacian_poly(const RootSystem& rs, const Polynomial& p);

// Dunkl Laplacian as sum_j T_j(T_j p); equals laplacian_poly on all input.
Polynomial laplacian_poly_iterated(const RootSystem& rs, const Polynomial& p);

}  // namespace dunkl
