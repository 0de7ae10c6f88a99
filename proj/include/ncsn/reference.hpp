// Independent verification solvers: the classical S_N problem and the slab
// diffusion problem with Marshak boundary conditions.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "linalg.hpp"
#include "mesh.hpp"
#include "problem.hpp"
#include "si.hpp"
#include "sweep.hpp"

namespace ncsn {

struct ClassicalSolution {
    bool converged = false;
    int iterations = 0;
    double spectral_radius_estimate = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> deviation_history;
    std::vector<double> l2_diff_history;
    MomentField psi;  // M = 0; one entry per angle
    ScalarField phi;
};

// Source iteration on mu Psi' + sigma_t Psi = (c sigma_t / 2) Phi + Q / 2
// with vacuum boundaries, using the same DG sweep and stopping machinery.
inline ClassicalSolution classical_sn_solve(double X, int cells, int N,
                                            double sigma_t, double c, double q,
                                            double xi, int max_iterations,
                                            StoppingNorm norm = StoppingNorm::L2) {
    const SpatialMesh mesh(X, cells);
    const AngularQuadrature aq = angular_quadrature(N);
    const std::vector<double> unit_weight{1.0};

    ClassicalSolution sol;
    sol.psi = MomentField(0, N, cells);
    ScalarField phi_old(cells, 0.0);
    ScalarField source(cells);

    for (int it = 1; it <= max_iterations; ++it) {
        for (std::size_t j = 0; j < source.size(); ++j) {
            source.data[j] = 0.5 * c * sigma_t * phi_old.data[j] + 0.5 * q;
        }
        classical_sweep(mesh, aq, sigma_t, source, sol.psi);
        ScalarField phi_new = angle_moment_contract(sol.psi, aq, unit_weight, 1.0);

        sol.iterations = it;
        sol.l2_diff_history.push_back(l2_norm_diff(phi_new, phi_old));
        // The first pass has no previous iterate to compare against.
        const double dev = it == 1 ? std::numeric_limits<double>::infinity()
                                   : relative_deviation(phi_new, phi_old, norm);
        sol.deviation_history.push_back(dev);
        sol.converged = it >= 2 && dev <= xi;
        phi_old = std::move(phi_new);
        if (sol.converged) {
            break;
        }
    }

    sol.phi = std::move(phi_old);
    sol.spectral_radius_estimate = spectral_radius_estimate(sol.l2_diff_history);
    return sol;
}

// Closed form of -(1/3 sigma_t) phi'' + (1-c) sigma_t phi = Q on [0, X]
// with Marshak conditions phi -+ (2/3 sigma_t) phi' = 0 at the endpoints:
// symmetric about the midplane with diffusion length L = 1/(sigma_t
// sqrt(3(1-c))).
inline double diffusion_analytic(double x, double X, double sigma_t, double c,
                                 double q) {
    const double diffusion_length = 1.0 / (sigma_t * std::sqrt(3.0 * (1.0 - c)));
    const double amplitude = q / ((1.0 - c) * sigma_t);
    const double half_width = 0.5 * X / diffusion_length;
    const double denom = std::cosh(half_width) +
                         2.0 / (3.0 * sigma_t * diffusion_length) * std::sinh(half_width);
    return amplitude * (1.0 - std::cosh((x - 0.5 * X) / diffusion_length) / denom);
}

// Second-order finite differences on the cell-vertex grid; the Marshak
// relations use one-sided second-order derivative stencils whose third
// entry is eliminated against the adjacent interior row, keeping the
// system tridiagonal. Returned as nodal values on the DG mesh.
inline ScalarField diffusion_solve(double X, int cells, double sigma_t, double c,
                                   double q) {
    if (cells < 3) {
        throw std::invalid_argument("diffusion_solve: need at least 3 cells");
    }
    if (!(c < 1.0)) {
        throw std::invalid_argument("diffusion_solve: c must be < 1");
    }
    const std::size_t n = static_cast<std::size_t>(cells) + 1;
    const double h = X / cells;
    const double diffusion = 1.0 / (3.0 * sigma_t);
    const double absorption = (1.0 - c) * sigma_t;
    const double beta = 1.0 / (3.0 * sigma_t * h);

    std::vector<double> lower(n, 0.0);
    std::vector<double> diag(n, 0.0);
    std::vector<double> upper(n, 0.0);
    std::vector<double> rhs(n, 0.0);

    const double off = -diffusion / (h * h);
    const double mid = 2.0 * diffusion / (h * h) + absorption;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        lower[i] = off;
        diag[i] = mid;
        upper[i] = off;
        rhs[i] = q;
    }

    // Left Marshak row (1 + 3 beta) phi_0 - 4 beta phi_1 + beta phi_2 = 0;
    // subtract (beta / off) times interior row 1 to clear the phi_2 entry.
    {
        const double factor = beta / off;
        diag[0] = (1.0 + 3.0 * beta) - factor * lower[1];
        upper[0] = -4.0 * beta - factor * diag[1];
        rhs[0] = -factor * rhs[1];
    }
    // Right Marshak row beta phi_{n-3} - 4 beta phi_{n-2} + (1 + 3 beta)
    // phi_{n-1} = 0, mirrored elimination against interior row n-2.
    {
        const double factor = beta / off;
        diag[n - 1] = (1.0 + 3.0 * beta) - factor * upper[n - 2];
        lower[n - 1] = -4.0 * beta - factor * diag[n - 2];
        rhs[n - 1] = -factor * rhs[n - 2];
    }

    const std::vector<double> vertex =
        tridiagonal_solve(std::move(lower), std::move(diag), std::move(upper),
                          std::move(rhs));

    ScalarField phi(cells);
    for (int i = 0; i < cells; ++i) {
        phi(i, 0) = vertex[static_cast<std::size_t>(i)];
        phi(i, 1) = vertex[static_cast<std::size_t>(i) + 1];
    }
    return phi;
}

}  // namespace ncsn
