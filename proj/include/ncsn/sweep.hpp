// Linear discontinuous-Galerkin transport sweeps: the Laguerre moment
// cascade for the transformed spectral equations (unit cross section) and
// the plain single-equation sweep used by the classical solver.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "freepath.hpp"
#include "mesh.hpp"
#include "quadrature.hpp"

namespace ncsn {

// Element matrices for mu psi' + sigma psi = q on one cell with upwind
// numerical flux. The inflow enters the right-hand side only.
struct DgCellSolver {
    double a11, a12, a21, a22;
    double inv_det;
    double mu;

    DgCellSolver(double mu_n, double h, double sigma) : mu(mu_n) {
        if (mu_n == 0.0) {
            throw std::invalid_argument("DgCellSolver: mu must be nonzero");
        }
        const double d3 = sigma * h / 3.0;
        const double d6 = sigma * h / 6.0;
        if (mu_n > 0.0) {
            a11 = 0.5 * mu_n + d3;
            a12 = 0.5 * mu_n + d6;
            a21 = -0.5 * mu_n + d6;
            a22 = 0.5 * mu_n + d3;
        } else {
            a11 = -0.5 * mu_n + d3;
            a12 = 0.5 * mu_n + d6;
            a21 = -0.5 * mu_n + d6;
            a22 = -0.5 * mu_n + d3;
        }
        const double det = a11 * a22 - a12 * a21;
        if (det == 0.0 || !std::isfinite(det)) {
            throw std::runtime_error("DgCellSolver: singular local system");
        }
        inv_det = 1.0 / det;
    }

    // qL, qR are the nodal source values; psi_in is the upwind inflow.
    void solve(double h, double qL, double qR, double psi_in, double& psiL,
               double& psiR) const {
        double b1 = h * (2.0 * qL + qR) / 6.0;
        double b2 = h * (qL + 2.0 * qR) / 6.0;
        if (mu > 0.0) {
            b1 += mu * psi_in;
        } else {
            b2 -= mu * psi_in;
        }
        psiL = (b1 * a22 - b2 * a12) * inv_det;
        psiR = (a11 * b2 - a21 * b1) * inv_det;
    }
};

// One full sweep of the transformed spectral system: for every angle the
// cells are visited in upwind order, and within a cell the moments are
// solved in ascending m with the right-hand side source - sum of all lower
// moments (the cascade). Vacuum boundaries; unit total cross section.
inline void cascade_sweep(const SpatialMesh& mesh, const AngularQuadrature& aq,
                          const ScalarField& source, MomentField& psi) {
    if (psi.N != aq.N || psi.cells != mesh.cells || source.cells != mesh.cells) {
        throw std::invalid_argument("cascade_sweep: dimension mismatch");
    }
    const int M = psi.M;
    const int cells = mesh.cells;
    const double h = mesh.h;
    std::vector<double> inflow(static_cast<std::size_t>(M) + 1);
    for (int n = 0; n < aq.N; ++n) {
        const DgCellSolver cell(aq.mu[static_cast<std::size_t>(n)], h, 1.0);
        const bool forward = aq.mu[static_cast<std::size_t>(n)] > 0.0;
        inflow.assign(inflow.size(), 0.0);
        for (int step = 0; step < cells; ++step) {
            const int i = forward ? step : cells - 1 - step;
            const double srcL = source(i, 0);
            const double srcR = source(i, 1);
            double* mom_left = psi.moments(n, i, 0);
            double* mom_right = psi.moments(n, i, 1);
            double accL = 0.0;
            double accR = 0.0;
            for (int m = 0; m <= M; ++m) {
                double psiL = 0.0;
                double psiR = 0.0;
                cell.solve(h, srcL - accL, srcR - accR,
                           inflow[static_cast<std::size_t>(m)], psiL, psiR);
                mom_left[m] = psiL;
                mom_right[m] = psiR;
                accL += psiL;
                accR += psiR;
                inflow[static_cast<std::size_t>(m)] = forward ? psiR : psiL;
            }
        }
    }
}

// Plain sweep of mu psi' + sigma_t psi = source with vacuum boundaries;
// the classical solver stores its per-angle solution as an M = 0 field.
inline void classical_sweep(const SpatialMesh& mesh, const AngularQuadrature& aq,
                            double sigma_t, const ScalarField& source,
                            MomentField& psi) {
    if (psi.M != 0) {
        throw std::invalid_argument("classical_sweep: field must have M = 0");
    }
    if (psi.N != aq.N || psi.cells != mesh.cells || source.cells != mesh.cells) {
        throw std::invalid_argument("classical_sweep: dimension mismatch");
    }
    const int cells = mesh.cells;
    const double h = mesh.h;
    for (int n = 0; n < aq.N; ++n) {
        const DgCellSolver cell(aq.mu[static_cast<std::size_t>(n)], h, sigma_t);
        const bool forward = aq.mu[static_cast<std::size_t>(n)] > 0.0;
        double inflow = 0.0;
        for (int step = 0; step < cells; ++step) {
            const int i = forward ? step : cells - 1 - step;
            double psiL = 0.0;
            double psiR = 0.0;
            cell.solve(h, source(i, 0), source(i, 1), inflow, psiL, psiR);
            psi(0, n, i, 0) = psiL;
            psi(0, n, i, 1) = psiR;
            inflow = forward ? psiR : psiL;
        }
    }
}

// scale * sum_n w_n sum_m weights_m psi_{m,n} at every node; the common
// kernel behind the scattering source and all flux recoveries.
inline ScalarField angle_moment_contract(const MomentField& psi,
                                         const AngularQuadrature& aq,
                                         const std::vector<double>& weights,
                                         double scale) {
    if (psi.N != aq.N) {
        throw std::invalid_argument("angle_moment_contract: angle mismatch");
    }
    if (weights.size() != static_cast<std::size_t>(psi.M) + 1) {
        throw std::invalid_argument("angle_moment_contract: weight count mismatch");
    }
    ScalarField out(psi.cells, 0.0);
    const int M = psi.M;
    for (int n = 0; n < psi.N; ++n) {
        const double wn = aq.w[static_cast<std::size_t>(n)];
        for (int i = 0; i < psi.cells; ++i) {
            for (int node = 0; node < 2; ++node) {
                const double* mom = psi.moments(n, i, node);
                double acc = 0.0;
                for (int m = 0; m <= M; ++m) {
                    acc += weights[static_cast<std::size_t>(m)] * mom[m];
                }
                out(i, node) += wn * acc;
            }
        }
    }
    if (scale != 1.0) {
        for (double& v : out.data) {
            v *= scale;
        }
    }
    return out;
}

// S(x) = (c/2) sum_n w_n sum_k c_k psi_{k,n}(x).
inline ScalarField scattering_source(const MomentField& psi,
                                     const AngularQuadrature& aq,
                                     const MomentCoefficients& mc, double c) {
    return angle_moment_contract(psi, aq, mc.c, 0.5 * c);
}

}  // namespace ncsn
