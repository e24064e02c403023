#include "dunkl/polynomial.hpp"

#include <cmath>

namespace dunkl {

Polynomial Polynomial::constant(int dim, double c) {
    Polynomial p(dim);
    p.add_term(Index(dim, 0), c);
    return p;
}

Polynomial Polynomial::monomial(const Index& idx, double c) {
    Polynomial p(int(idx.size()));
    p.add_term(idx, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [idx, c] : terms_) {
        int t = 0;
        for (int e : idx) t += e;
        d = std::max(d, t);
    }
    return d;
}

void Polynomial::add_term(const Index& idx, double c) {
    if (int(idx.size()) != dim_) fail("DimensionMismatch", "polynomial index dim");
    terms_[idx] += c;
    if (terms_[idx] == 0.0) terms_.erase(idx);
}

double Polynomial::coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? 0.0 : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
    r.prune();
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    for (const auto& [idx, c] : o.terms_) r.add_term(idx, -c);
    r.prune();
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(dim_);
    for (const auto& [ia, ca] : terms_)
        for (const auto& [ib, cb] : o.terms_) {
            Index idx(dim_);
            for (int d = 0; d < dim_; ++d) idx[d] = ia[d] + ib[d];
            r.add_term(idx, ca * cb);
        }
    r.prune();
    return r;
}

Polynomial Polynomial::operator*(double s) const {
    Polynomial r = *this;
    for (auto& [idx, c] : r.terms_) c *= s;
    return r;
}

double Polynomial::eval(const Vec& x) const {
    double s = 0.0;
    for (const auto& [idx, c] : terms_) {
        double m = c;
        for (int d = 0; d < dim_; ++d)
            for (int e = 0; e < idx[d]; ++e) m *= x[d];
        s += m;
    }
    return s;
}

Cplx Polynomial::eval(const std::vector<Cplx>& x) const {
    Cplx s = 0.0;
    for (const auto& [idx, c] : terms_) {
        Cplx m = c;
        for (int d = 0; d < dim_; ++d)
            for (int e = 0; e < idx[d]; ++e) m *= x[d];
        s += m;
    }
    return s;
}

Polynomial Polynomial::derivative(int axis) const {
    Polynomial r(dim_);
    for (const auto& [idx, c] : terms_) {
        if (idx[axis] == 0) continue;
        Index d = idx;
        d[axis] -= 1;
        r.add_term(d, c * idx[axis]);
    }
    return r;
}

Polynomial Polynomial::directional_derivative(const Vec& xi) const {
    Polynomial r(dim_);
    for (int a = 0; a < dim_; ++a)
        if (xi[a] != 0.0) r = r + derivative(a) * xi[a];
    return r;
}

Polynomial Polynomial::compose_linear(const Mat& m) const {
    Polynomial r(dim_);
    for (const auto& [idx, c] : terms_) {
        Polynomial term = Polynomial::constant(dim_, c);
        for (int d = 0; d < dim_; ++d) {
            // (M x)_d = sum_j m(d,j) x_j
            Polynomial lin(dim_);
            for (int j = 0; j < dim_; ++j) {
                if (m.at(d, j) == 0.0) continue;
                Index e(dim_, 0);
                e[j] = 1;
                lin.add_term(e, m.at(d, j));
            }
            for (int p = 0; p < idx[d]; ++p) term = term * lin;
        }
        r = r + term;
    }
    r.prune();
    return r;
}

Polynomial Polynomial::divide_by_linear(const Vec& alpha, double ref_scale) const {
    double scale = std::max({max_abs_coeff(), ref_scale, 1e-300});
    if (max_abs_coeff() <= 1e-13 * scale) return Polynomial(dim_);
    // pivot on the largest component of alpha; peel terms of highest pivot
    // degree (the dividend is assumed divisible, checked at the end)
    int piv = 0;
    for (int d = 1; d < dim_; ++d)
        if (std::abs(alpha[d]) > std::abs(alpha[piv])) piv = d;
    double ap = alpha[piv];
    Polynomial rem = *this;
    Polynomial quot(dim_);
    while (!rem.empty()) {
        // term with maximal pivot exponent
        auto best = rem.terms_.begin();
        for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
            if (it->first[piv] > best->first[piv]) best = it;
        if (best->first[piv] == 0) break;
        Index qi = best->first;
        qi[piv] -= 1;
        double qc = best->second / ap;
        quot.add_term(qi, qc);
        // rem -= qc * x^qi * <alpha, x>
        for (int d = 0; d < dim_; ++d) {
            if (alpha[d] == 0.0) continue;
            Index t = qi;
            t[d] += 1;
            rem.add_term(t, -qc * alpha[d]);
        }
        rem.prune_relative(scale);
    }
    if (rem.max_abs_coeff() > 1e-9 * scale)
        fail("NotDivisible", "polynomial not divisible by the linear form");
    quot.prune();
    return quot;
}

void Polynomial::prune() {
    double scale = max_abs_coeff();
    prune_relative(scale);
}

void Polynomial::prune_relative(double scale) {
    if (scale <= 0) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < 1e-14 * scale)
            it = terms_.erase(it);
        else
            ++it;
    }
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [idx, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial dunkl_apply_poly(const RootSystem& rs, const Vec& xi, const Polynomial& p) {
    if (p.dim() != rs.dim()) fail("DimensionMismatch", "polynomial vs root system");
    Polynomial out = p.directional_derivative(xi);
    for (size_t a = 0; a < rs.positive_roots().size(); ++a) {
        double k = rs.positive_multiplicities()[a];
        if (k == 0.0) continue;
        const Vec& alpha = rs.positive_roots()[a];
        double axi = dot(alpha, xi);
        if (axi == 0.0) continue;
        Mat refl = Mat::identity(rs.dim());
        // sigma_alpha as a matrix
        for (int i = 0; i < rs.dim(); ++i)
            for (int j = 0; j < rs.dim(); ++j)
                refl.at(i, j) -= 2.0 * alpha[i] * alpha[j] / norm2sq(alpha);
        Polynomial diff = p - p.compose_linear(refl);
        out = out + diff.divide_by_linear(alpha, p.max_abs_coeff()) * (k * axi);
    }
    return out;
}

Polynomial laplacian_poly(const RootSystem& rs, const Polynomial& p) {
    if (p.dim() != rs.dim()) fail("DimensionMismatch", "polynomial vs root system");
    Polynomial out(p.dim());
    for (int a = 0; a < p.dim(); ++a) out = out + p.derivative(a).derivative(a);
    for (size_t a = 0; a < rs.positive_roots().size(); ++a) {
        double k = rs.positive_multiplicities()[a];
        if (k == 0.0) continue;
        const Vec& alpha = rs.positive_roots()[a];
        Mat refl = Mat::identity(rs.dim());
        for (int i = 0; i < rs.dim(); ++i)
            for (int j = 0; j < rs.dim(); ++j)
                refl.at(i, j) -= 2.0 * alpha[i] * alpha[j] / norm2sq(alpha);
        // delta_alpha p = [ <alpha,x> d_alpha p - (p - p o sigma) ] / <alpha,x>^2
        Polynomial lin(p.dim());
        for (int j = 0; j < p.dim(); ++j) {
            if (alpha[j] == 0.0) continue;
            Polynomial::Index e(p.dim(), 0);
            e[j] = 1;
            lin.add_term(e, alpha[j]);
        }
        Polynomial num = lin * p.directional_derivative(alpha) -
                         (p - p.compose_linear(refl));
        double ref = p.max_abs_coeff();
        Polynomial delta = num.divide_by_linear(alpha, ref).divide_by_linear(alpha, ref);
        out = out + delta * (2.0 * k);
    }
    return out;
}

Polynomial laplacian_poly_iterated(const RootSystem& rs, const Polynomial& p) {
    Polynomial out(p.dim());
    for (int j = 0; j < p.dim(); ++j) {
        Vec ej(p.dim(), 0.0);
        ej[j] = 1.0;
        out = out + dunkl_apply_poly(rs, ej, dunkl_apply_poly(rs, ej, p));
    }
    return out;
}

}  // namespace dunkl
