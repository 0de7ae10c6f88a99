// S2 transport synthetic acceleration: the precomputed low-order error
// operator and the accelerated outer iteration.
#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "mesh.hpp"
#include "postprocess.hpp"
#include "problem.hpp"
#include "si.hpp"
#include "sweep.hpp"

namespace ncsn {

// L maps a nodal scalar source g to the scattering source produced by one
// S2 moment-cascade sweep of g; the error equation is (I - L) S_eps = L r.
struct LowOrderOperator {
    int cells = 0;
    int M = 0;
    double c = 0.0;
    AngularQuadrature aq2;
    std::vector<double> L;  // row-major, dimension (2 cells)^2
    DenseLU factored;       // LU of I - L
    int assembly_sweeps = 0;

    [[nodiscard]] std::vector<double> apply(const std::vector<double>& v) const {
        const std::size_t n = static_cast<std::size_t>(2 * cells);
        std::vector<double> out(n, 0.0);
        for (std::size_t row = 0; row < n; ++row) {
            double acc = 0.0;
            const double* Lrow = L.data() + row * n;
            for (std::size_t col = 0; col < n; ++col) {
                acc += Lrow[col] * v[col];
            }
            out[row] = acc;
        }
        return out;
    }
};

// Builds L column-by-column from unit impulses at every DG node, then
// factors I - L. The operator depends only on the mesh, c, and the
// scattering moments, so one assembly serves the whole outer iteration.
inline LowOrderOperator assemble_low_order(const SpatialMesh& mesh, int M, double c,
                                           const MomentCoefficients& mc) {
    LowOrderOperator op;
    op.cells = mesh.cells;
    op.M = M;
    op.c = c;
    op.aq2 = angular_quadrature(2);
    const std::size_t n = static_cast<std::size_t>(2 * mesh.cells);
    op.L.assign(n * n, 0.0);

    MomentField eps(M, 2, mesh.cells);
    ScalarField impulse(mesh.cells, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        impulse.fill(0.0);
        impulse.data[col] = 1.0;
        cascade_sweep(mesh, op.aq2, impulse, eps);
        ++op.assembly_sweeps;
        const ScalarField response = scattering_source(eps, op.aq2, mc, c);
        for (std::size_t row = 0; row < n; ++row) {
            op.L[row * n + col] = response.data[row];
        }
    }

    std::vector<double> a(n * n);
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t col = 0; col < n; ++col) {
            const double identity = row == col ? 1.0 : 0.0;
            a[row * n + col] = identity - op.L[row * n + col];
        }
    }
    op.factored = DenseLU(n, std::move(a));
    return op;
}

// Solves (I - L) S_eps = L r, then sweeps S_eps + r once at S2 to obtain
// the error moments; the pair satisfies the discrete error equation exactly.
inline std::pair<ScalarField, MomentField> error_solve(const LowOrderOperator& op,
                                                       const SpatialMesh& mesh,
                                                       const ScalarField& residual) {
    const std::vector<double> rhs = op.apply(residual.data);
    ScalarField s_eps(op.cells);
    s_eps.data = op.factored.solve(rhs);

    ScalarField sweep_source(op.cells);
    for (std::size_t j = 0; j < sweep_source.size(); ++j) {
        sweep_source.data[j] = s_eps.data[j] + residual.data[j];
    }
    MomentField eps(op.M, 2, op.cells);
    cascade_sweep(mesh, op.aq2, sweep_source, eps);
    return {std::move(s_eps), std::move(eps)};
}

inline SolveReport s2sa_solve(const ProblemConfig& cfg) {
    validate(cfg);
    const SpatialMesh mesh(cfg.X, cfg.cells);
    const AngularQuadrature aq = angular_quadrature(cfg.N);
    const QuadratureRule squad = free_path_quadrature(cfg.moment_quad_nodes(), cfg.X);
    const MomentCoefficients mc = compute_moments(cfg.free_path_model(), cfg.M, squad);
    const LowOrderOperator op = assemble_low_order(mesh, cfg.M, cfg.c, mc);

    SolveReport report;
    report.psi = MomentField(cfg.M, cfg.N, cfg.cells);
    ScalarField scattering(cfg.cells, 0.0);
    ScalarField phi_old(cfg.cells, 0.0);
    ScalarField source(cfg.cells);
    ScalarField f_corrected(cfg.cells, 0.0);

    for (int it = 1; it <= cfg.max_iterations; ++it) {
        for (std::size_t j = 0; j < source.size(); ++j) {
            source.data[j] = scattering.data[j] + 0.5 * cfg.q;
        }
        cascade_sweep(mesh, aq, source, report.psi);
        const ScalarField half_step = scattering_source(report.psi, aq, mc, cfg.c);

        ScalarField residual(cfg.cells);
        for (std::size_t j = 0; j < residual.size(); ++j) {
            residual.data[j] = half_step.data[j] - scattering.data[j];
        }
        auto [s_eps, eps] = error_solve(op, mesh, residual);

        ScalarField phi_new = scalar_flux(report.psi, aq, mc);
        const ScalarField phi_eps = scalar_flux(eps, op.aq2, mc);
        f_corrected = collision_rate_density(report.psi, aq, mc);
        const ScalarField f_eps = collision_rate_density(eps, op.aq2, mc);
        for (std::size_t j = 0; j < phi_new.size(); ++j) {
            phi_new.data[j] += phi_eps.data[j];
            f_corrected.data[j] += f_eps.data[j];
            scattering.data[j] = half_step.data[j] + s_eps.data[j];
        }

        report.iterations = it;
        report.l2_diff_history.push_back(l2_norm_diff(phi_new, phi_old));
        // The first pass has no previous iterate to compare against.
        const double dev =
            it == 1 ? std::numeric_limits<double>::infinity()
                    : relative_deviation(phi_new, phi_old, cfg.stopping_norm);
        report.deviation_history.push_back(dev);
        const bool diverged = !std::isfinite(l2_norm(phi_new));
        report.converged = it >= 2 && !diverged && dev <= cfg.xi;
        phi_old = std::move(phi_new);
        if (report.converged || diverged) {
            break;
        }
    }

    report.phi = std::move(phi_old);
    report.f = std::move(f_corrected);
    report.spectral_radius_estimate =
        ncsn::spectral_radius_estimate(report.l2_diff_history);
    return report;
}

// Dispatch helper used by the CLI and experiment drivers.
inline SolveReport run_solver(const ProblemConfig& cfg) {
    return cfg.solver == SolverKind::S2SA ? s2sa_solve(cfg) : si_solve(cfg);
}

}  // namespace ncsn
