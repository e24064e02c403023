#pragma once

#include <functional>
#include <memory>

#include "dunkl/root_system.hpp"

namespace dunkl {

// Tensor grid, symmetric about the origin on every axis, exactly closed under
// the reflection group of the root system it was built for. Carries
// w(x) h^N quadrature weights (with moment-corrected windows around the
// reflection hyperplanes of product systems whose weight exponent is not an
// even integer).
class WeightedGrid {
public:
    struct Axis {
        int n;
        double h;
        double coord(int i) const { return (i - 0.5 * (n - 1)) * h; }
    };

    WeightedGrid(std::shared_ptr<const RootSystem> rs, int points_per_axis,
                 double extent);

    const RootSystem& rs() const { return *rs_; }
    std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
    int dim() const { return int(axes_.size()); }
    const Axis& axis(int a) const { return axes_[a]; }
    size_t size() const { return size_; }

    Vec point(size_t flat) const;
    double coord(int a, int i) const { return axes_[a].coord(i); }
    size_t flat_index(const std::vector<int>& idx) const;
    std::vector<int> multi_index(size_t flat) const;

    // exact index image of a grid point under group element g
    size_t reflect_index(size_t flat, size_t group_elem) const {
        return group_maps_[group_elem][flat];
    }
    size_t sigma_alpha_index(size_t flat, int positive_root) const {
        return alpha_maps_[positive_root][flat];
    }

    double quad_weight(size_t flat) const;
    // per-axis 1-D quadrature weights (only for product systems)
    const Vec& axis_quad_weights(int a) const { return axis_qw_[a]; }
    double cell_volume() const;  // h^N

    bool has_node_on_hyperplane() const { return odd_; }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<Axis> axes_;
    size_t size_;
    bool odd_;
    std::vector<Vec> axis_qw_;               // product systems
    Vec full_qw_;                            // general systems
    std::vector<std::vector<uint32_t>> group_maps_;
    std::vector<std::vector<uint32_t>> alpha_maps_;
};

using GridPtr = std::shared_ptr<const WeightedGrid>;

GridPtr make_grid(std::shared_ptr<const RootSystem> rs, int points_per_axis,
                  double extent);

// Sampled real function on a weighted grid. `invalid_margin` marks a band of
// cells along every boundary that norm computations skip (used by stencil
// operators that refuse one-sided differences).
struct GridFunction {
    GridPtr grid;
    Vec values;
    int invalid_margin = 0;

    GridFunction() = default;
    GridFunction(GridPtr g, double fill = 0.0)
        : grid(std::move(g)), values(grid->size(), fill) {}

    double l1_norm() const;
    double l2_norm() const;
    double max_norm() const;
    double integral() const;  // integral against dw
    bool in_margin(size_t flat) const;

    GridFunction& operator+=(const GridFunction& o);
    GridFunction& operator-=(const GridFunction& o);
    GridFunction& operator*=(double s);
};

GridFunction sample(const GridPtr& g, const std::function<double(const Vec&)>& f);

// Complex-valued counterpart used on the spectral side.
struct SpectralFunction {
    GridPtr grid;
    std::vector<Cplx> values;

    SpectralFunction() = default;
    explicit SpectralFunction(GridPtr g)
        : grid(std::move(g)), values(grid->size(), Cplx(0.0)) {}

    double l2_norm() const;
};

}  // namespace dunkl
