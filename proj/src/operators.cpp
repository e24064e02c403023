#include "dunkl/operators.hpp"

#include <cmath>

namespace dunkl {

namespace {

// first derivative along one axis; returns 0 inside the boundary band
double axis_d1(const GridFunction& f, size_t flat, int axis, Scheme s) {
    const auto& g = *f.grid;
    int n = g.axis(axis).n;
    double h = g.axis(axis).h;
    // stride of this axis in the flat layout
    size_t stride = 1;
    for (int a = g.dim() - 1; a > axis; --a) stride *= g.axis(a).n;
    int i = int((flat / stride) % size_t(n));
    const Vec& v = f.values;
    if (s == Scheme::Central2) {
        if (i < 1 || i >= n - 1) return 0.0;
        return (v[flat + stride] - v[flat - stride]) / (2.0 * h);
    }
    if (i < 2 || i >= n - 2) return 0.0;
    return (-v[flat + 2 * stride] + 8.0 * v[flat + stride] - 8.0 * v[flat - stride] +
            v[flat - 2 * stride]) /
           (12.0 * h);
}

double axis_d2(const GridFunction& f, size_t flat, int axis, Scheme s) {
    const auto& g = *f.grid;
    int n = g.axis(axis).n;
    double h = g.axis(axis).h;
    size_t stride = 1;
    for (int a = g.dim() - 1; a > axis; --a) stride *= g.axis(a).n;
    int i = int((flat / stride) % size_t(n));
    const Vec& v = f.values;
    if (s == Scheme::Central2) {
        if (i < 1 || i >= n - 1) return 0.0;
        return (v[flat + stride] - 2.0 * v[flat] + v[flat - stride]) / (h * h);
    }
    if (i < 2 || i >= n - 2) return 0.0;
    return (-v[flat + 2 * stride] + 16.0 * v[flat + stride] - 30.0 * v[flat] +
            16.0 * v[flat - stride] - v[flat - 2 * stride]) /
           (12.0 * h * h);
}

double directional_d1(const GridFunction& f, size_t flat, const Vec& dir, Scheme s) {
    double r = 0.0;
    for (int a = 0; a < f.grid->dim(); ++a)
        if (dir[a] != 0.0) r += dir[a] * axis_d1(f, flat, a, s);
    return r;
}

// second derivative along a general direction: sum_{ab} dir_a dir_b d_a d_b f;
// cross terms by nested first-derivative stencils
double directional_d2(const GridFunction& f, size_t flat, const Vec& dir, Scheme s) {
    const auto& g = *f.grid;
    double r = 0.0;
    for (int a = 0; a < g.dim(); ++a) {
        if (dir[a] == 0.0) continue;
        r += dir[a] * dir[a] * axis_d2(f, flat, a, s);
        for (int b = a + 1; b < g.dim(); ++b) {
            if (dir[b] == 0.0) continue;
            // cross term via second-order four-point stencil
            size_t sa = 1, sb = 1;
            for (int q = g.dim() - 1; q > a; --q) sa *= g.axis(q).n;
            for (int q = g.dim() - 1; q > b; --q) sb *= g.axis(q).n;
            int na = g.axis(a).n, nb = g.axis(b).n;
            int ia = int((flat / sa) % size_t(na));
            int ib = int((flat / sb) % size_t(nb));
            if (ia < 1 || ia >= na - 1 || ib < 1 || ib >= nb - 1) continue;
            const Vec& v = f.values;
            double cross = (v[flat + sa + sb] - v[flat + sa - sb] - v[flat - sa + sb] +
                            v[flat - sa - sb]) /
                           (4.0 * g.axis(a).h * g.axis(b).h);
            r += 2.0 * dir[a] * dir[b] * cross;
        }
    }
    return r;
}

}  // namespace

GridFunction dunkl_apply_grid(const RootSystem& rs, const Vec& xi,
                              const GridFunction& f, Scheme scheme) {
    const auto& g = *f.grid;
    for (int a = 0; a < g.dim(); ++a)
        if (g.axis(a).n < 5) fail("GridTooSmall", "need at least 5 points per axis");
    GridFunction out(f.grid);
    out.invalid_margin = f.invalid_margin + scheme_width(scheme);
    const double tol = 1e-12;
    for (size_t p = 0; p < g.size(); ++p) {
        double val = directional_d1(f, p, xi, scheme);
        Vec x = g.point(p);
        for (size_t r = 0; r < rs.positive_roots().size(); ++r) {
            double k = rs.positive_multiplicities()[r];
            if (k == 0.0) continue;
            const Vec& alpha = rs.positive_roots()[r];
            double axi = dot(alpha, xi);
            if (axi == 0.0) continue;
            double ax = dot(alpha, x);
            if (std::abs(ax) < tol) {
                // removable singularity: limit is d_alpha f
                val += k * axi * directional_d1(f, p, alpha, scheme);
            } else {
                size_t q = g.sigma_alpha_index(p, int(r));
                val += k * axi * (f.values[p] - f.values[q]) / ax;
            }
        }
        out.values[p] = val;
    }
    return out;
}

GridFunction laplacian_grid(const RootSystem& rs, const GridFunction& f, Scheme scheme) {
    const auto& g = *f.grid;
    for (int a = 0; a < g.dim(); ++a)
        if (g.axis(a).n < 5) fail("GridTooSmall", "need at least 5 points per axis");
    GridFunction out(f.grid);
    out.invalid_margin = f.invalid_margin + scheme_width(scheme);
    const double tol = 1e-12;
    for (size_t p = 0; p < g.size(); ++p) {
        double val = 0.0;
        for (int a = 0; a < g.dim(); ++a) val += axis_d2(f, p, a, scheme);
        Vec x = g.point(p);
        for (size_t r = 0; r < rs.positive_roots().size(); ++r) {
            double k = rs.positive_multiplicities()[r];
            if (k == 0.0) continue;
            const Vec& alpha = rs.positive_roots()[r];
            double ax = dot(alpha, x);
            double delta;
            if (std::abs(ax) < tol) {
                delta = 0.5 * directional_d2(f, p, alpha, scheme);
            } else {
                size_t q = g.sigma_alpha_index(p, int(r));
                delta = directional_d1(f, p, alpha, scheme) / ax -
                        (f.values[p] - f.values[q]) / (ax * ax);
            }
            val += 2.0 * k * delta;
        }
        out.values[p] = val;
    }
    return out;
}

bool TXFunction::uniform_t(double tol) const {
    if (tvals.size() < 2) return true;
    double d = tvals[1] - tvals[0];
    for (size_t i = 1; i + 1 < tvals.size(); ++i)
        if (std::abs((tvals[i + 1] - tvals[i]) - d) > tol * std::abs(d)) return false;
    return true;
}

double TXFunction::max_norm_interior() const {
    double m = 0.0;
    GridFunction probe(grid);
    probe.invalid_margin = invalid_x_margin;
    for (size_t i = invalid_t_margin; i + invalid_t_margin < nt(); ++i) {
        for (size_t p = 0; p < grid->size(); ++p)
            if (!probe.in_margin(p)) m = std::max(m, std::abs(slices[i][p]));
    }
    return m;
}

TXFunction operator_L_grid(const RootSystem& rs, const TXFunction& u, Scheme scheme) {
    if (u.nt() < 5) fail("GridTooSmall", "need at least 5 t-slices");
    if (!u.uniform_t()) fail("GridTooSmall", "operator_L_grid needs a uniform t-axis");
    int w = scheme_width(scheme);
    double ht = u.dt();
    TXFunction out(u.tvals, u.grid);
    out.invalid_t_margin = u.invalid_t_margin + w;
    out.invalid_x_margin = u.invalid_x_margin + w;
    size_t nx = u.grid->size();
    for (size_t i = 0; i < u.nt(); ++i) {
        bool interior = (i >= size_t(w) && i + size_t(w) < u.nt());
        GridFunction slice(u.grid);
        slice.values = u.slices[i];
        GridFunction lap = laplacian_grid(rs, slice, scheme);
        for (size_t p = 0; p < nx; ++p) {
            double dtt = 0.0;
            if (interior) {
                if (scheme == Scheme::Central2) {
                    dtt = (u.slices[i + 1][p] - 2.0 * u.slices[i][p] + u.slices[i - 1][p]) /
                          (ht * ht);
                } else {
                    dtt = (-u.slices[i + 2][p] + 16.0 * u.slices[i + 1][p] -
                           30.0 * u.slices[i][p] + 16.0 * u.slices[i - 1][p] -
                           u.slices[i - 2][p]) /
                          (12.0 * ht * ht);
                }
            }
            out.slices[i][p] = dtt + lap.values[p];
        }
    }
    return out;
}

}  // namespace dunkl
