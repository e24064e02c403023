#include "dunkl/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dunkl/special.hpp"

namespace dunkl {

Mat mat_mul(const Mat& A, const Mat& B) {
    Mat C;
    C.n = A.n;
    C.a.assign(size_t(A.n) * A.n, 0.0);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            double aik = A.at(i, k);
            for (int j = 0; j < A.n; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

namespace {

Mat reflection_matrix(const Vec& alpha) {
    int n = int(alpha.size());
    Mat m = Mat::identity(n);
    double nz = norm2sq(alpha);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) -= 2.0 * alpha[i] * alpha[j] / nz;
    return m;
}

// quantized key for matrix dedup at 1e-10 tolerance
std::vector<int64_t> mat_key(const Mat& m) {
    std::vector<int64_t> k(m.a.size());
    for (size_t i = 0; i < m.a.size(); ++i) k[i] = llround(m.a[i] * 1e10);
    return k;
}

bool same_vec(const Vec& a, const Vec& b, double tol) {
    for (size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

RootSystem::RootSystem(int dim, std::vector<Vec> roots, Vec mults, int group_cap)
    : dim_(dim) {
    if (roots.empty()) fail("NotARootSystem", "no roots supplied");
    if (roots.size() != mults.size())
        fail("NotARootSystem", "roots and multiplicities differ in length");
    input_scales_.resize(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) {
        if (int(roots[i].size()) != dim) fail("NotARootSystem", "root dimension mismatch");
        double n2 = norm2sq(roots[i]);
        if (n2 < 1e-24) fail("NotARootSystem", "zero root");
        if (mults[i] < 0) fail("NotARootSystem", "negative multiplicity");
        double s = std::sqrt(2.0 / n2);
        input_scales_[i] = s;
        roots[i] = scaled(roots[i], s);
    }
    // deduplicate (a root given twice is legal input)
    std::vector<Vec> uniq;
    Vec umult;
    for (size_t i = 0; i < roots.size(); ++i) {
        bool found = false;
        for (size_t j = 0; j < uniq.size(); ++j) {
            if (same_vec(uniq[j], roots[i], 1e-10)) {
                if (std::abs(umult[j] - mults[i]) > 1e-12)
                    fail("NotARootSystem", "conflicting multiplicities for one root");
                found = true;
            }
        }
        if (!found) {
            uniq.push_back(roots[i]);
            umult.push_back(mults[i]);
        }
    }
    // close under negation
    for (size_t i = 0, m = uniq.size(); i < m; ++i) {
        Vec neg = scaled(uniq[i], -1.0);
        bool found = false;
        for (const Vec& r : uniq)
            if (same_vec(r, neg, 1e-10)) found = true;
        if (!found) {
            uniq.push_back(neg);
            umult.push_back(umult[i]);
        }
    }
    roots_ = uniq;

    // positive subsystem: positive on a fixed generic direction
    Vec dir(dim_);
    for (int i = 0; i < dim_; ++i) dir[i] = 1.0 + 0.618033988749 * i;
    std::vector<size_t> pos_idx;
    for (size_t i = 0; i < roots_.size(); ++i) {
        double d = dot(roots_[i], dir);
        if (std::abs(d) < 1e-12)
            fail("NotARootSystem", "generic direction degenerate; perturb roots");
        if (d > 0) pos_idx.push_back(i);
    }
    if (2 * pos_idx.size() != roots_.size())
        fail("NotARootSystem", "roots not symmetric under negation");
    for (size_t i : pos_idx) {
        positive_.push_back(roots_[i]);
        pos_mult_.push_back(umult[i]);
    }

    // full multiplicity list aligned with roots_ (needed by weight())
    all_mult_.clear();
    for (size_t i = 0; i < roots_.size(); ++i) {
        double m = -1.0;
        for (size_t p = 0; p < positive_.size(); ++p) {
            if (same_vec(roots_[i], positive_[p], 1e-10) ||
                same_vec(roots_[i], scaled(positive_[p], -1.0), 1e-10))
                m = pos_mult_[p];
        }
        if (m < 0) fail("NotARootSystem", "internal multiplicity alignment");
        all_mult_.push_back(m);
    }

    generate_group(group_cap);
    validate();

    gamma_ = 0.0;
    for (double k : pos_mult_) gamma_ += k;
    hom_dim_ = dim_ + 2.0 * gamma_;

    // product detection: every root along a coordinate axis
    product_ = true;
    axis_mult_.assign(dim_, 0.0);
    for (size_t p = 0; p < positive_.size(); ++p) {
        int axis = -1;
        for (int j = 0; j < dim_; ++j) {
            if (std::abs(positive_[p][j]) > 1e-10) {
                if (axis >= 0) {
                    product_ = false;
                    break;
                }
                axis = j;
            }
        }
        if (!product_) break;
        axis_mult_[axis] = pos_mult_[p];
    }
    if (!product_) axis_mult_.assign(dim_, 0.0);
}

void RootSystem::generate_group(int cap) {
    std::map<std::vector<int64_t>, size_t> seen;
    group_.clear();
    Mat id = Mat::identity(dim_);
    group_.push_back(id);
    seen[mat_key(id)] = 0;
    for (const Vec& a : positive_) {
        Mat r = reflection_matrix(a);
        auto key = mat_key(r);
        if (!seen.count(key)) {
            seen[key] = group_.size();
            group_.push_back(r);
        }
    }
    size_t frontier = 0;
    while (frontier < group_.size()) {
        Mat g = group_[frontier++];
        for (const Vec& a : positive_) {
            Mat h = mat_mul(reflection_matrix(a), g);
            auto key = mat_key(h);
            if (!seen.count(key)) {
                if (int(group_.size()) >= cap)
                    fail("GroupExplosion", "generated group exceeds cap " +
                                               std::to_string(cap));
                seen[key] = group_.size();
                group_.push_back(h);
            }
        }
    }
}

void RootSystem::validate() {
    // reflections keep R invariant
    for (size_t p = 0; p < positive_.size(); ++p) {
        for (size_t i = 0; i < roots_.size(); ++i) {
            Vec im = reflect(roots_[i], int(p));
            bool found = false;
            for (size_t j = 0; j < roots_.size(); ++j) {
                if (same_vec(roots_[j], im, 1e-9)) {
                    if (std::abs(all_mult_[j] - all_mult_[i]) > 1e-12)
                        fail("NotARootSystem", "multiplicity not G-invariant");
                    found = true;
                    break;
                }
            }
            if (!found) fail("NotARootSystem", "reflection closure fails");
        }
    }
    // orthogonality of all group elements
    for (const Mat& g : group_) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                double s = 0;
                for (int k = 0; k < dim_; ++k) s += g.at(k, i) * g.at(k, j);
                double expect = (i == j) ? 1.0 : 0.0;
                if (std::abs(s - expect) > 1e-12)
                    fail("NotARootSystem", "group element not orthogonal");
            }
    }
}

Vec RootSystem::reflect(const Vec& x, int p) const {
    const Vec& a = positive_[p];
    double c = 2.0 * dot(a, x) / norm2sq(a);
    Vec y = x;
    for (int i = 0; i < dim_; ++i) y[i] -= c * a[i];
    return y;
}

double RootSystem::weight(const Vec& x) const {
    double w = 1.0;
    for (size_t p = 0; p < positive_.size(); ++p) {
        if (pos_mult_[p] == 0.0) continue;
        w *= std::pow(std::abs(dot(positive_[p], x)), 2.0 * pos_mult_[p]);
    }
    return w;
}

double RootSystem::orbit_distance(const Vec& x, const Vec& y) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Mat& g : group_) {
        Vec gy = g.apply(y);
        best = std::min(best, norm2(sub(x, gy)));
    }
    return best;
}

double RootSystem::ball_volume_estimate(const Vec& center, double r) const {
    double v = std::pow(r, dim_);
    for (size_t p = 0; p < positive_.size(); ++p)
        v *= std::pow(std::abs(dot(positive_[p], center)) + r, 2.0 * pos_mult_[p]);
    return v;
}

namespace {

// interior points where <alpha, (x1, y)> = 0 crosses the vertical chord
Vec chord_splits(const RootSystem& rs, double x1, double ylo, double yhi) {
    Vec s;
    for (size_t p = 0; p < rs.positive_roots().size(); ++p) {
        const Vec& a = rs.positive_roots()[p];
        if (std::abs(a[1]) > 1e-14) {
            double y = -a[0] * x1 / a[1];
            if (y > ylo && y < yhi) s.push_back(y);
        }
    }
    return s;
}

}  // namespace

double RootSystem::ball_volume(const Vec& center, double r) const {
    if (!(r > 0)) fail("DomainError", "ball_volume: r > 0 required");
    auto compute = [&](double tol) -> double {
        if (dim_ == 1) {
            double a = center[0] - r, b = center[0] + r;
            return adaptive_quad([&](double x) { return weight({x}); }, a, b, tol, {0.0});
        }
        if (dim_ == 2) {
            double a = center[0] - r, b = center[0] + r;
            auto inner = [&](double x1) {
                double half = std::sqrt(std::max(0.0, r * r - (x1 - center[0]) * (x1 - center[0])));
                double ylo = center[1] - half, yhi = center[1] + half;
                if (yhi <= ylo) return 0.0;
                return adaptive_quad([&](double y) { return weight({x1, y}); }, ylo, yhi,
                                     tol, chord_splits(*this, x1, ylo, yhi));
            };
            return adaptive_quad(inner, a, b, tol, {0.0});
        }
        fail("DomainError", "ball_volume implemented for N <= 2");
    };
    double coarse = compute(1e-7);
    double fine = compute(1e-9);
    if (std::abs(fine - coarse) > 1e-6 * (std::abs(fine) + 1e-300))
        fail("QuadratureNotConverged", "ball_volume refinement disagreement");
    return fine;
}

RootSystem rank1(double k) {
    return RootSystem(1, {{std::sqrt(2.0)}}, {k});
}

RootSystem product_z2(const Vec& ks) {
    int n = int(ks.size());
    std::vector<Vec> roots;
    for (int j = 0; j < n; ++j) {
        Vec r(n, 0.0);
        r[j] = std::sqrt(2.0);
        roots.push_back(r);
    }
    return RootSystem(n, roots, ks);
}

RootSystem dihedral(int m, double k, double k2) {
    if (m < 1) fail("NotARootSystem", "dihedral order must be >= 1");
    std::vector<Vec> roots;
    Vec mults;
    // positive roots of I2(m) at angles pi l / m, rotated so that the m even
    // case has roots on the axes
    for (int l = 0; l < m; ++l) {
        double th = M_PI * l / m;
        roots.push_back({std::sqrt(2.0) * std::cos(th), std::sqrt(2.0) * std::sin(th)});
        if (m % 2 == 0 && k2 >= 0.0)
            mults.push_back(l % 2 == 0 ? k : k2);
        else
            mults.push_back(k);
    }
    return RootSystem(2, roots, mults);
}

RootSystem b2(double k1, double k2) { return dihedral(4, k1, k2); }

RootSystem custom_system(int dim, const std::vector<Vec>& roots, const Vec& mults) {
    return RootSystem(dim, roots, mults);
}

}  // namespace dunkl
