// Uniform slab mesh and the nodal storage for discontinuous-Galerkin
// scalar and angular-moment fields.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ncsn {

struct SpatialMesh {
    double X = 0.0;
    int cells = 0;
    double h = 0.0;

    SpatialMesh() = default;
    SpatialMesh(double slab_length, int n_cells)
        : X(slab_length), cells(n_cells), h(slab_length / n_cells) {
        if (!(slab_length > 0.0) || n_cells < 1) {
            throw std::invalid_argument("SpatialMesh: need X > 0 and cells >= 1");
        }
    }

    [[nodiscard]] double x_left(int i) const { return h * i; }
    [[nodiscard]] double x_right(int i) const { return h * (i + 1); }
};

// Per-cell linear nodal values (left, right), stored as [2*i + node].
struct ScalarField {
    int cells = 0;
    std::vector<double> data;

    ScalarField() = default;
    explicit ScalarField(int n_cells, double value = 0.0)
        : cells(n_cells), data(static_cast<std::size_t>(2 * n_cells), value) {}

    [[nodiscard]] double& operator()(int i, int node) {
        return data[static_cast<std::size_t>(2 * i + node)];
    }
    [[nodiscard]] double operator()(int i, int node) const {
        return data[static_cast<std::size_t>(2 * i + node)];
    }
    [[nodiscard]] std::size_t size() const { return data.size(); }
    void fill(double value) { data.assign(data.size(), value); }
};

// Angular-moment unknowns psi_{m,n} at both cell nodes. The Laguerre index
// m runs fastest so the per-node moment cascade works on contiguous memory.
struct MomentField {
    int M = 0;
    int N = 0;
    int cells = 0;
    std::vector<double> data;

    MomentField() = default;
    MomentField(int order_M, int n_angles, int n_cells)
        : M(order_M),
          N(n_angles),
          cells(n_cells),
          data(static_cast<std::size_t>(order_M + 1) * n_angles * n_cells * 2, 0.0) {
        if (order_M < 0 || n_angles < 1 || n_cells < 1) {
            throw std::invalid_argument("MomentField: invalid dimensions");
        }
    }

    [[nodiscard]] std::size_t index(int m, int n, int i, int node) const {
        return (static_cast<std::size_t>(n) * cells + i) * 2 * (M + 1) +
               static_cast<std::size_t>(node) * (M + 1) + m;
    }
    [[nodiscard]] double& operator()(int m, int n, int i, int node) {
        return data[index(m, n, i, node)];
    }
    [[nodiscard]] double operator()(int m, int n, int i, int node) const {
        return data[index(m, n, i, node)];
    }
    // Pointer to the contiguous moment run at (n, i, node).
    [[nodiscard]] double* moments(int n, int i, int node) {
        return data.data() + index(0, n, i, node);
    }
    [[nodiscard]] const double* moments(int n, int i, int node) const {
        return data.data() + index(0, n, i, node);
    }
    void fill(double value) { data.assign(data.size(), value); }
};

inline bool all_finite(const std::vector<double>& values) {
    for (const double v : values) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

}  // namespace ncsn
