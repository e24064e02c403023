#pragma once

#include <string>

#include "dunkl/common.hpp"

namespace dunkl {

// Square orthogonal matrix stored row-major.
struct Mat {
    int n = 0;
    Vec a;  // n*n entries

    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }

    Vec apply(const Vec& x) const {
        Vec y(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    static Mat identity(int n) {
        Mat m;
        m.n = n;
        m.a.assign(size_t(n) * n, 0.0);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

Mat mat_mul(const Mat& A, const Mat& B);

// Normalized reduced root system with a >= 0 multiplicity function and the
// reflection group generated to closure.
class RootSystem {
public:
    // roots are rescaled to |alpha|^2 = 2; the applied scale factors are kept
    // in input_scales (one per supplied root).
    RootSystem(int dim, std::vector<Vec> roots, Vec multiplicities,
               int group_cap = 1024);

    int dim() const { return dim_; }
    const std::vector<Vec>& roots() const { return roots_; }
    const std::vector<Vec>& positive_roots() const { return positive_; }
    const Vec& positive_multiplicities() const { return pos_mult_; }
    double multiplicity(int positive_index) const { return pos_mult_[positive_index]; }
    const std::vector<Mat>& group() const { return group_; }
    double gamma() const { return gamma_; }
    double homogeneous_dim() const { return hom_dim_; }
    const Vec& input_scales() const { return input_scales_; }

    // True when every root is a multiple of a coordinate vector (rank-one and
    // Z2^N products); such systems carry fully separable machinery.
    bool is_product() const { return product_; }
    // For product systems: per-axis multiplicity k_a (0 when the axis carries
    // no root).
    const Vec& axis_multiplicities() const { return axis_mult_; }

    double weight(const Vec& x) const;
    double orbit_distance(const Vec& x, const Vec& y) const;

    // Exact and estimated w-volumes of the Euclidean ball B(center, r).
    // The quadrature result refines panels near reflection hyperplanes and
    // throws Error("QuadratureNotConverged") when two refinement levels
    // disagree by more than 1e-6 relative.
    double ball_volume(const Vec& center, double r) const;
    double ball_volume_estimate(const Vec& center, double r) const;

    Vec reflect(const Vec& x, int positive_index) const;

private:
    void generate_group(int cap);
    void validate();

    int dim_;
    std::vector<Vec> roots_;
    std::vector<Vec> positive_;
    Vec pos_mult_;
    Vec all_mult_;
    Vec input_scales_;
    std::vector<Mat> group_;
    double gamma_ = 0.0;
    double hom_dim_ = 0.0;
    bool product_ = false;
    Vec axis_mult_;
};

// Presets addressable from the CLI config.
RootSystem rank1(double k);
RootSystem product_z2(const Vec& ks);
RootSystem dihedral(int m, double k, double k2 = -1.0);
RootSystem b2(double k1, double k2);
RootSystem custom_system(int dim, const std::vector<Vec>& roots, const Vec& mults);

}  // namespace dunkl
