#include "dunkl/kernel.hpp"

#include <cmath>

#include "dunkl/special.hpp"

namespace dunkl {

double rank1_log_real_kernel(double k, double s) {
    if (k == 0.0) return s;
    if (s >= 0.0) return -s + log_hyp1f1_pos(k + 1.0, 2.0 * k + 1.0, 2.0 * s);
    return s + log_hyp1f1_pos(k, 2.0 * k + 1.0, -2.0 * s);
}

Cplx rank1_imag_kernel(double k, double s) {
    if (k == 0.0) return Cplx(std::cos(s), std::sin(s));
    double even = bessel_j_norm(k - 0.5, s);
    double odd = s / (2.0 * k + 1.0) * bessel_j_norm(k + 0.5, s);
    return Cplx(even, odd);
}

KernelEvaluator::KernelEvaluator(std::shared_ptr<const RootSystem> rs, int nmax,
                                 double radius)
    : rs_(std::move(rs)), nmax_(nmax), radius_(radius) {
    if (rs_->is_product())
        mode_ = rs_->dim() == 1 ? Mode::Rank1Closed : Mode::ProductClosed;
    else
        mode_ = Mode::Series;
    if (mode_ == Mode::Series) build_series();
}

namespace {

std::vector<Polynomial::Index> monomials_of_degree(int dim, int deg) {
    std::vector<Polynomial::Index> out;
    Polynomial::Index idx(dim, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == dim - 1) {
            idx[pos] = left;
            out.push_back(idx);
            return;
        }
        for (int e = left; e >= 0; --e) {
            idx[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, deg);
    return out;
}

// least-squares solve of the (overdetermined, consistent) stacked system by
// Householder QR; returns the relative residual of the ORIGINAL system
Vec solve_least_squares(const std::vector<Vec>& rows_in, const Vec& rhs_in,
                        double* resid) {
    int m = int(rows_in.size());
    int n = m ? int(rows_in[0].size()) : 0;
    std::vector<Vec> A = rows_in;
    Vec b = rhs_in;
    for (int col = 0; col < n && col < m; ++col) {
        // Householder vector for column col
        double nrm = 0.0;
        for (int r = col; r < m; ++r) nrm += A[r][col] * A[r][col];
        nrm = std::sqrt(nrm);
        if (nrm < 1e-300) continue;
        double alpha = A[col][col] > 0 ? -nrm : nrm;
        Vec v(m, 0.0);
        v[col] = A[col][col] - alpha;
        for (int r = col + 1; r < m; ++r) v[r] = A[r][col];
        double vn = 0.0;
        for (int r = col; r < m; ++r) vn += v[r] * v[r];
        if (vn < 1e-300) continue;
        for (int j = col; j < n; ++j) {
            double s = 0.0;
            for (int r = col; r < m; ++r) s += v[r] * A[r][j];
            s *= 2.0 / vn;
            for (int r = col; r < m; ++r) A[r][j] -= s * v[r];
        }
        double s = 0.0;
        for (int r = col; r < m; ++r) s += v[r] * b[r];
        s *= 2.0 / vn;
        for (int r = col; r < m; ++r) b[r] -= s * v[r];
    }
    Vec c(n, 0.0);
    for (int i = std::min(n, m) - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A[i][j] * c[j];
        c[i] = std::abs(A[i][i]) < 1e-300 ? 0.0 : s / A[i][i];
    }
    if (resid) {
        double r2 = 0.0, b2 = 0.0;
        for (int r = 0; r < m; ++r) {
            double s = 0.0;
            for (int j = 0; j < n; ++j) s += rows_in[r][j] * c[j];
            r2 += (s - rhs_in[r]) * (s - rhs_in[r]);
            b2 += rhs_in[r] * rhs_in[r];
        }
        *resid = std::sqrt(r2) / std::max(std::sqrt(b2), 1e-300);
    }
    return c;
}

}  // namespace

void KernelEvaluator::build_series() {
    int N = rs_->dim();
    blocks_.resize(nmax_ + 1);
    blocks_[0].xmono = monomials_of_degree(N, 0);
    blocks_[0].ymono = blocks_[0].xmono;
    blocks_[0].coeff = {1.0};

    for (int n = 1; n <= nmax_; ++n) {
        SeriesBlock& blk = blocks_[n];
        blk.xmono = monomials_of_degree(N, n);
        blk.ymono = blk.xmono;
        const SeriesBlock& prev = blocks_[n - 1];
        int Dn = int(blk.xmono.size());
        int Dp = int(prev.xmono.size());
        blk.coeff.assign(size_t(Dn) * Dn, 0.0);

        // rows of the stacked system: for each j and each degree-(n-1)
        // x-monomial, T_{e_j} E_n matches y_j E_{n-1} coefficient-wise
        std::vector<std::vector<Vec>> A(N);  // A[j][row over Dp][col over Dn]
        for (int j = 0; j < N; ++j) {
            A[j].assign(Dp, Vec(Dn, 0.0));
            Vec ej(N, 0.0);
            ej[j] = 1.0;
            for (int col = 0; col < Dn; ++col) {
                Polynomial mono = Polynomial::monomial(blk.xmono[col]);
                Polynomial img = dunkl_apply_poly(*rs_, ej, mono);
                for (int row = 0; row < Dp; ++row)
                    A[j][row][col] = img.coeff(prev.xmono[row]);
            }
        }

        // independent solve per y-monomial
        for (int yv = 0; yv < Dn; ++yv) {
            std::vector<Vec> rows;
            Vec rhs;
            for (int j = 0; j < N; ++j) {
                Polynomial::Index yprev = blk.ymono[yv];
                bool has = yprev[j] > 0;
                if (has) yprev[j] -= 1;
                int pcol = -1;
                if (has)
                    for (int q = 0; q < Dp; ++q)
                        if (prev.ymono[q] == yprev) pcol = q;
                for (int row = 0; row < Dp; ++row) {
                    rows.push_back(A[j][row]);
                    rhs.push_back(pcol >= 0 ? prev.coeff[size_t(row) * Dp + pcol] : 0.0);
                }
            }
            double resid = 0.0;
            Vec c = solve_least_squares(rows, rhs, &resid);
            bool rhs_zero = true;
            for (double v : rhs)
                if (v != 0.0) rhs_zero = false;
            if (!rhs_zero && resid > 1e-10)
                fail("NotConverged", "kernel series block inconsistent at degree " +
                                         std::to_string(n));
            for (int xv = 0; xv < Dn; ++xv) blk.coeff[size_t(xv) * Dn + yv] = c[xv];
        }
    }
}

const KernelEvaluator::SeriesBlock& KernelEvaluator::series_block(int n) const {
    if (mode_ != Mode::Series) fail("DomainError", "series blocks only in series mode");
    if (n < 0 || n > nmax_) fail("DomainError", "series degree out of range");
    return blocks_[n];
}

double KernelEvaluator::log_real_kernel(const Vec& x, const Vec& y) const {
    if (mode_ == Mode::Series) {
        std::vector<Cplx> z(y.size());
        for (size_t i = 0; i < y.size(); ++i) z[i] = y[i];
        double v = series_eval(x, z).real();
        if (v <= 0.0) fail("NotConverged", "series kernel non-positive on real input");
        return std::log(v);
    }
    double s = 0.0;
    for (int a = 0; a < rs_->dim(); ++a)
        s += rank1_log_real_kernel(rs_->axis_multiplicities()[a], x[a] * y[a]);
    return s;
}

double KernelEvaluator::real_kernel(const Vec& x, const Vec& y) const {
    return std::exp(log_real_kernel(x, y));
}

Cplx KernelEvaluator::imag_kernel(const Vec& x, const Vec& y) const {
    if (mode_ == Mode::Series) {
        std::vector<Cplx> z(y.size());
        for (size_t i = 0; i < y.size(); ++i) z[i] = Cplx(0.0, y[i]);
        return series_eval(x, z);
    }
    Cplx p(1.0, 0.0);
    for (int a = 0; a < rs_->dim(); ++a)
        p *= rank1_imag_kernel(rs_->axis_multiplicities()[a], x[a] * y[a]);
    return p;
}

Cplx KernelEvaluator::kernel(const Vec& x, const std::vector<Cplx>& z) const {
    if (mode_ == Mode::Series) return series_eval(x, z);
    bool all_real = true, all_imag = true;
    for (const Cplx& c : z) {
        if (c.imag() != 0.0) all_real = false;
        if (c.real() != 0.0) all_imag = false;
    }
    if (all_real) {
        Vec y(z.size());
        for (size_t i = 0; i < z.size(); ++i) y[i] = z[i].real();
        return real_kernel(x, y);
    }
    if (all_imag) {
        Vec y(z.size());
        for (size_t i = 0; i < z.size(); ++i) y[i] = z[i].imag();
        return imag_kernel(x, y);
    }
    // general complex argument through 1F1 within its series cap
    Cplx p(1.0, 0.0);
    for (int a = 0; a < rs_->dim(); ++a) {
        double k = rs_->axis_multiplicities()[a];
        Cplx s = x[a] * z[a];
        if (k == 0.0)
            p *= std::exp(s);
        else
            p *= std::exp(s) * hyp1f1(k, 2.0 * k + 1.0, -2.0 * s);
    }
    return p;
}

Cplx KernelEvaluator::series_eval(const Vec& x, const std::vector<Cplx>& z) const {
    double zn = 0.0;
    for (const Cplx& c : z) zn += std::norm(c);
    double r = norm2(x) * std::sqrt(zn);
    if (r > radius_) {
        // tail bound sum_{n>nmax} r^n/n!
        double tail = std::pow(r, nmax_ + 1);
        for (int i = 2; i <= nmax_ + 1; ++i) tail /= i;
        tail *= std::exp(r);
        fail("TruncationTooLarge",
             "series kernel outside radius guard, tail estimate " + std::to_string(tail));
    }
    Cplx total(0.0);
    int N = rs_->dim();
    for (int n = 0; n <= nmax_; ++n) {
        const SeriesBlock& blk = blocks_[n];
        int Dn = int(blk.xmono.size());
        // x^mu and z^nu tables
        Vec xpow(Dn);
        std::vector<Cplx> zpow(Dn);
        for (int i = 0; i < Dn; ++i) {
            double xv = 1.0;
            Cplx zv(1.0);
            for (int a = 0; a < N; ++a) {
                for (int e = 0; e < blk.xmono[i][a]; ++e) xv *= x[a];
                for (int e = 0; e < blk.ymono[i][a]; ++e) zv *= z[a];
            }
            xpow[i] = xv;
            zpow[i] = zv;
        }
        for (int i = 0; i < Dn; ++i) {
            if (xpow[i] == 0.0) continue;
            for (int j = 0; j < Dn; ++j) {
                double c = blk.coeff[size_t(i) * Dn + j];
                if (c != 0.0) total += c * xpow[i] * zpow[j];
            }
        }
    }
    return total;
}

KernelBoundReport kernel_bound_report(const KernelEvaluator& ev,
                                      const std::vector<std::pair<Vec, Vec>>& sweep) {
    const RootSystem& rs = ev.rs();
    KernelBoundReport rep;
    rep.all_positive = true;
    rep.max_imag_modulus = 0.0;
    rep.max_ginvariance_err = 0.0;

    // fit the gaussian rate c: the lower envelope needs
    //   log E >= log C0 - log w(B(x,1)) + (|x|^2+|y|^2)/2 - c |x-y|^2
    // pick c as the max over the sweep of the exact-rate witness, capped
    double c_fit = 0.5;
    std::vector<double> logE(sweep.size()), logvol(sweep.size());
    for (size_t i = 0; i < sweep.size(); ++i) {
        const auto& [x, y] = sweep[i];
        logE[i] = ev.log_real_kernel(x, y);
        logvol[i] = std::log(rs.ball_volume_estimate(x, 1.0));
        double exy = norm2sq(sub(x, y));
        if (exy > 1.0) {
            double base = 0.5 * (norm2sq(x) + norm2sq(y)) - logvol[i];
            double witness = (base - logE[i]) / exy;
            c_fit = std::max(c_fit, witness * 1.05);
        }
    }
    rep.fitted_c = c_fit;
    rep.min_lower_ratio = rep.min_upper_ratio = 1e300;
    rep.max_lower_ratio = rep.max_upper_ratio = 0.0;
    for (size_t i = 0; i < sweep.size(); ++i) {
        const auto& [x, y] = sweep[i];
        double base = 0.5 * (norm2sq(x) + norm2sq(y)) - logvol[i];
        double lo = base - c_fit * norm2sq(sub(x, y));
        double d = rs.orbit_distance(x, y);
        double hi = base - d * d / c_fit;
        KernelBoundRow row;
        row.x = x;
        row.y = y;
        row.value = std::exp(logE[i]);
        row.lower_ratio = std::exp(logE[i] - lo);
        row.upper_ratio = std::exp(logE[i] - hi);
        if (!(row.value > 0.0) || !std::isfinite(row.value)) rep.all_positive = false;
        rep.min_lower_ratio = std::min(rep.min_lower_ratio, row.lower_ratio);
        rep.max_lower_ratio = std::max(rep.max_lower_ratio, row.lower_ratio);
        rep.min_upper_ratio = std::min(rep.min_upper_ratio, row.upper_ratio);
        rep.max_upper_ratio = std::max(rep.max_upper_ratio, row.upper_ratio);
        rep.rows.push_back(row);
        // |E(ix,y)| <= 1 and G-invariance spot checks on the same sweep
        rep.max_imag_modulus = std::max(rep.max_imag_modulus, std::abs(ev.imag_kernel(x, y)));
        for (const Mat& g : rs.group()) {
            double e2 = ev.log_real_kernel(g.apply(x), g.apply(y));
            rep.max_ginvariance_err =
                std::max(rep.max_ginvariance_err, std::abs(e2 - logE[i]));
        }
    }
    return rep;
}

}  // namespace dunkl
