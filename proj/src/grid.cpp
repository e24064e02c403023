#include "dunkl/grid.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/special.hpp"

namespace dunkl {

namespace {

// Singular Euler-Maclaurin (Navot) corrections for the 1-D weight c|x|^beta
// on a uniform symmetric grid. For half-line nodes x_j = (j+a)h,
//   h sum_j x_j^beta f(x_j) - int_0^inf x^beta f dx
//     = sum_l zeta_H(-beta-l, a) f^(l)(0) h^{beta+l+1} / l!.
// Both half-lines combined, odd l cancels; the even-l corrections are folded
// into the weights of the nodes nearest the hyperplane through an even
// polynomial fit f ~ a0 + a2 x^2 + a4 x^4. `a` is 1/2 for offset grids and 1
// for grids with a node on the hyperplane (x = 0 handled separately; its
// weight stays zero).
void apply_navot_correction(Vec& qw, const std::vector<double>& coords, double c,
                            double beta, double h, bool zero_node) {
    double a = zero_node ? 1.0 : 0.5;
    double d0 = hurwitz_zeta(-beta, a);
    double d2 = hurwitz_zeta(-beta - 2.0, a);
    // nodes used for the even fit: three smallest positive |x|
    std::vector<int> idx;
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] > 1e-15 * h) idx.push_back(int(i));
    std::sort(idx.begin(), idx.end(),
              [&](int i, int j) { return coords[i] < coords[j]; });
    idx.resize(3);
    double x1 = coords[idx[0]], x2 = coords[idx[1]], x3 = coords[idx[2]];
    // invert the 3x3 Vandermonde in x^2 for (a0, a2) rows
    double v1 = x1 * x1, v2 = x2 * x2, v3 = x3 * x3;
    double det = (v2 - v1) * (v3 - v1) * (v3 - v2);
    // Lagrange coefficients for value-at-0 and second-derivative-at-0
    double L0[3] = {v2 * v3 * (v3 - v2) / det, -v1 * v3 * (v3 - v1) / det,
                    v1 * v2 * (v2 - v1) / det};
    double L2[3] = {-(v2 + v3) * (v3 - v2) / det, (v1 + v3) * (v3 - v1) / det,
                    -(v1 + v2) * (v2 - v1) / det};
    // f(0) = sum L0_i f_e(x_i), f''(0) = 2 sum L2_i f_e(x_i), with the even
    // part f_e(x_i) = (f(x_i) + f(-x_i))/2
    // l=0: -2c d0 h^{b+1} a0;  l=2: -2c d2 h^{b+3}/2! * (f''(0) = 2 a2)
    double c0 = -2.0 * c * d0 * std::pow(h, beta + 1.0);
    double c2 = -2.0 * c * d2 * std::pow(h, beta + 3.0);
    for (int t = 0; t < 3; ++t) {
        int ip = idx[t];
        // locate the mirror node
        int im = -1;
        for (size_t i = 0; i < coords.size(); ++i)
            if (std::abs(coords[i] + coords[ip]) < 1e-12 * h) im = int(i);
        double add = 0.5 * (c0 * L0[t] + c2 * L2[t]);
        qw[ip] += add;
        qw[im] += add;
    }
}

bool is_even_integer(double x) {
    double r = std::round(x / 2.0) * 2.0;
    return std::abs(x - r) < 1e-12;
}

}  // namespace

WeightedGrid::WeightedGrid(std::shared_ptr<const RootSystem> rs, int n, double extent)
    : rs_(std::move(rs)) {
    if (n < 5) fail("GridTooSmall", "need at least 5 points per axis");
    int N = rs_->dim();
    double h = 2.0 * extent / n;
    axes_.assign(N, Axis{n, h});
    odd_ = (n % 2 == 1);
    size_ = 1;
    for (int a = 0; a < N; ++a) size_ *= size_t(n);

    // per-axis quadrature weights for product systems
    if (rs_->is_product()) {
        axis_qw_.resize(N);
        for (int a = 0; a < N; ++a) {
            double k = rs_->axis_multiplicities()[a];
            double twok = 2.0 * k;
            double c = std::pow(2.0, k);  // |sqrt(2) x|^{2k} = 2^k |x|^{2k}
            Vec qw(n);
            for (int i = 0; i < n; ++i)
                qw[i] = c * std::pow(std::abs(axes_[a].coord(i)), twok) * h;
            if (twok > 0.0 && !is_even_integer(twok)) {
                std::vector<double> coords(n);
                for (int i = 0; i < n; ++i) coords[i] = axes_[a].coord(i);
                apply_navot_correction(qw, coords, c, twok, h, odd_);
            }
            axis_qw_[a] = qw;
        }
    } else {
        full_qw_.resize(size_);
        double cell = std::pow(h, N);
        for (size_t f = 0; f < size_; ++f) full_qw_[f] = rs_->weight(point(f)) * cell;
    }

    // exact index maps for every group element; verifies closure on the way
    const auto& G = rs_->group();
    group_maps_.resize(G.size());
    for (size_t gi = 0; gi < G.size(); ++gi) {
        group_maps_[gi].resize(size_);
        for (size_t f = 0; f < size_; ++f) {
            Vec y = G[gi].apply(point(f));
            std::vector<int> idx(N);
            for (int a = 0; a < N; ++a) {
                double u = y[a] / h + 0.5 * (n - 1);
                int i = int(std::lround(u));
                if (i < 0 || i >= n || std::abs(u - i) > 1e-9)
                    fail("NotARootSystem",
                         "grid not exactly closed under the reflection group");
                idx[a] = i;
            }
            group_maps_[gi][f] = uint32_t(flat_index(idx));
        }
    }
    alpha_maps_.resize(rs_->positive_roots().size());
    for (size_t p = 0; p < alpha_maps_.size(); ++p) {
        alpha_maps_[p].resize(size_);
        for (size_t f = 0; f < size_; ++f) {
            Vec y = rs_->reflect(point(f), int(p));
            std::vector<int> idx(N);
            for (int a = 0; a < N; ++a) {
                double u = y[a] / h + 0.5 * (n - 1);
                int i = int(std::lround(u));
                if (i < 0 || i >= n || std::abs(u - i) > 1e-9)
                    fail("NotARootSystem", "reflection leaves the grid");
                idx[a] = i;
            }
            alpha_maps_[p][f] = uint32_t(flat_index(idx));
        }
    }
}

Vec WeightedGrid::point(size_t flat) const {
    int N = dim();
    Vec x(N);
    for (int a = N - 1; a >= 0; --a) {
        int n = axes_[a].n;
        x[a] = axes_[a].coord(int(flat % n));
        flat /= n;
    }
    return x;
}

size_t WeightedGrid::flat_index(const std::vector<int>& idx) const {
    size_t f = 0;
    for (int a = 0; a < dim(); ++a) f = f * axes_[a].n + idx[a];
    return f;
}

std::vector<int> WeightedGrid::multi_index(size_t flat) const {
    int N = dim();
    std::vector<int> idx(N);
    for (int a = N - 1; a >= 0; --a) {
        idx[a] = int(flat % axes_[a].n);
        flat /= axes_[a].n;
    }
    return idx;
}

double WeightedGrid::quad_weight(size_t flat) const {
    if (!rs_->is_product()) return full_qw_[flat];
    double w = 1.0;
    for (int a = dim() - 1; a >= 0; --a) {
        int n = axes_[a].n;
        w *= axis_qw_[a][flat % n];
        flat /= n;
    }
    return w;
}

double WeightedGrid::cell_volume() const {
    double c = 1.0;
    for (const Axis& ax : axes_) c *= ax.h;
    return c;
}

GridPtr make_grid(std::shared_ptr<const RootSystem> rs, int n, double extent) {
    return std::make_shared<WeightedGrid>(std::move(rs), n, extent);
}

bool GridFunction::in_margin(size_t flat) const {
    if (invalid_margin == 0) return false;
    auto idx = grid->multi_index(flat);
    for (int a = 0; a < grid->dim(); ++a) {
        if (idx[a] < invalid_margin || idx[a] >= grid->axis(a).n - invalid_margin)
            return true;
    }
    return false;
}

double GridFunction::l1_norm() const {
    double s = 0;
    for (size_t f = 0; f < values.size(); ++f)
        if (!in_margin(f)) s += std::abs(values[f]) * grid->quad_weight(f);
    return s;
}

double GridFunction::l2_norm() const {
    double s = 0;
    for (size_t f = 0; f < values.size(); ++f)
        if (!in_margin(f)) s += values[f] * values[f] * grid->quad_weight(f);
    return std::sqrt(s);
}

double GridFunction::max_norm() const {
    double s = 0;
    for (size_t f = 0; f < values.size(); ++f)
        if (!in_margin(f)) s = std::max(s, std::abs(values[f]));
    return s;
}

double GridFunction::integral() const {
    double s = 0;
    for (size_t f = 0; f < values.size(); ++f)
        if (!in_margin(f)) s += values[f] * grid->quad_weight(f);
    return s;
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
    for (size_t f = 0; f < values.size(); ++f) values[f] += o.values[f];
    invalid_margin = std::max(invalid_margin, o.invalid_margin);
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
    for (size_t f = 0; f < values.size(); ++f) values[f] -= o.values[f];
    invalid_margin = std::max(invalid_margin, o.invalid_margin);
    return *this;
}

GridFunction& GridFunction::operator*=(double s) {
    for (double& v : values) v *= s;
    return *this;
}

GridFunction sample(const GridPtr& g, const std::function<double(const Vec&)>& f) {
    GridFunction out(g);
    for (size_t i = 0; i < g->size(); ++i) out.values[i] = f(g->point(i));
    return out;
}

double SpectralFunction::l2_norm() const {
    double s = 0;
    for (size_t f = 0; f < values.size(); ++f)
        s += std::norm(values[f]) * grid->quad_weight(f);
    return std::sqrt(s);
}

}  // namespace dunkl
