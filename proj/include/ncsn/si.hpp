// Source iteration for the nonclassical spectral S_N system, with the
// stopping test and spectral-radius estimation shared by all drivers.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "mesh.hpp"
#include "postprocess.hpp"
#include "problem.hpp"
#include "quadrature.hpp"
#include "sweep.hpp"

namespace ncsn {

inline constexpr double kDivisionGuard = 1e-300;

struct DivisionGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double l2_norm_diff(const ScalarField& a, const ScalarField& b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a.data[j] - b.data[j];
        acc += d * d;
    }
    return std::sqrt(acc);
}

inline double l2_norm(const ScalarField& a) {
    double acc = 0.0;
    for (const double v : a.data) {
        acc += v * v;
    }
    return std::sqrt(acc);
}

// Relative deviation of phi_new from phi_old in the requested norm.
inline double relative_deviation(const ScalarField& phi_new,
                                 const ScalarField& phi_old, StoppingNorm norm) {
    if (norm == StoppingNorm::L2) {
        const double den = l2_norm(phi_old);
        const double num = l2_norm_diff(phi_new, phi_old);
        if (den == 0.0) {
            return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
        }
        return num / den;
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < phi_new.size(); ++j) {
        const double diff = std::abs(phi_new.data[j] - phi_old.data[j]);
        const double den = std::abs(phi_old.data[j]);
        if (den < kDivisionGuard) {
            if (diff == 0.0) {
                continue;
            }
            throw DivisionGuardError(
                "relative_deviation: vanishing reference value at a moving point");
        }
        worst = std::max(worst, diff / den);
    }
    return worst;
}

inline bool stopping_check(const ScalarField& phi_new, const ScalarField& phi_old,
                           double xi, StoppingNorm norm) {
    return relative_deviation(phi_new, phi_old, norm) <= xi;
}

// Asymptotic error-reduction factor: the ratio of the last two L2 norms of
// successive iterate differences. NaN when the history is too short or the
// denominator underflows.
inline double spectral_radius_estimate(const std::vector<double>& l2_diff_history) {
    const std::size_t len = l2_diff_history.size();
    if (len < 3) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double den = l2_diff_history[len - 2];
    if (!(den > std::numeric_limits<double>::min())) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return l2_diff_history[len - 1] / den;
}

struct SolveReport {
    bool converged = false;
    int iterations = 0;
    double spectral_radius_estimate = std::numeric_limits<double>::quiet_NaN();
    // Relative deviations in the configured stopping norm, one per iteration.
    std::vector<double> deviation_history;
    // Absolute L2 norms of successive Phi differences, one per iteration.
    std::vector<double> l2_diff_history;
    MomentField psi;
    ScalarField phi;
    ScalarField f;
};

inline SolveReport si_solve(const ProblemConfig& cfg) {
    validate(cfg);
    const SpatialMesh mesh(cfg.X, cfg.cells);
    const AngularQuadrature aq = angular_quadrature(cfg.N);
    const QuadratureRule squad = free_path_quadrature(cfg.moment_quad_nodes(), cfg.X);
    const MomentCoefficients mc = compute_moments(cfg.free_path_model(), cfg.M, squad);

    SolveReport report;
    report.psi = MomentField(cfg.M, cfg.N, cfg.cells);
    ScalarField scattering(cfg.cells, 0.0);
    ScalarField phi_old(cfg.cells, 0.0);
    ScalarField source(cfg.cells);

    for (int it = 1; it <= cfg.max_iterations; ++it) {
        for (std::size_t j = 0; j < source.size(); ++j) {
            source.data[j] = scattering.data[j] + 0.5 * cfg.q;
        }
        cascade_sweep(mesh, aq, source, report.psi);
        ScalarField phi_new = scalar_flux(report.psi, aq, mc);
        scattering = scattering_source(report.psi, aq, mc, cfg.c);

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
    report.f = collision_rate_density(report.psi, aq, mc);
    report.spectral_radius_estimate =
        ncsn::spectral_radius_estimate(report.l2_diff_history);
    return report;
}

}  // namespace ncsn
