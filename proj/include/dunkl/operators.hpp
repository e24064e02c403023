#pragma once

#include "dunkl/grid.hpp"
#include "dunkl/polynomial.hpp"

namespace dunkl {

enum class Scheme { Central2, Central4 };

inline int scheme_width(Scheme s) { return s == Scheme::Central2 ? 1 : 2; }

// T_xi f by central differences plus exact reflected-index difference terms.
// Nodes on a reflection hyperplane get the removable-singularity limit
// (the directional derivative, estimated by the same stencil).
GridFunction dunkl_apply_grid(const RootSystem& rs, const Vec& xi,
                              const GridFunction& f, Scheme scheme = Scheme::Central4);

// Dunkl Laplacian on the grid (euclidean stencil + 2 sum k delta_alpha with
// the hyperplane limit (1/2) d_alpha^2 f).
GridFunction laplacian_grid(const RootSystem& rs, const GridFunction& f,
                            Scheme scheme = Scheme::Central4);

// Function sampled on a (t, x) product grid; slices share one x-grid.
struct TXFunction {
    Vec tvals;
    GridPtr grid;
    std::vector<Vec> slices;      // slices[i] has grid->size() values
    int invalid_t_margin = 0;     // t-slices to skip at both ends
    int invalid_x_margin = 0;

    TXFunction() = default;
    TXFunction(Vec t, GridPtr g)
        : tvals(std::move(t)), grid(std::move(g)),
          slices(tvals.size(), Vec(grid->size(), 0.0)) {}

    size_t nt() const { return tvals.size(); }
    bool uniform_t(double tol = 1e-9) const;
    double dt() const { return tvals.size() > 1 ? tvals[1] - tvals[0] : 0.0; }

    double max_norm_interior() const;
};

// L = d_t^2 + Delta_x applied slice-wise; boundary t-slices marked invalid.
TXFunction operator_L_grid(const RootSystem& rs, const TXFunction& u,
                           Scheme scheme = Scheme::Central4);

}  // namespace dunkl
