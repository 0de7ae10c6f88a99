// CSV emission for solutions, run reports, and scan tables. All floating
// point values render with 17 significant digits so golden files detect
// numerical drift.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "mesh.hpp"
#include "postprocess.hpp"
#include "quadrature.hpp"
#include "si.hpp"

namespace ncsn {

// Two rows per cell (left node, right node): x, phi, f, then one column of
// angle-integrated psi_m per requested moment index.
inline void write_solution_csv(std::ostream& out, const SpatialMesh& mesh,
                               const ScalarField& phi, const ScalarField& f,
                               const MomentField& psi, const AngularQuadrature& aq,
                               const std::vector<int>& moment_columns) {
    out << "x,phi,f";
    for (const int m : moment_columns) {
        out << ",psi" << m;
    }
    out << "\n";

    std::vector<ScalarField> moments;
    moments.reserve(moment_columns.size());
    for (const int m : moment_columns) {
        std::vector<double> selector(static_cast<std::size_t>(psi.M) + 1, 0.0);
        selector[static_cast<std::size_t>(m)] = 1.0;
        moments.push_back(angle_moment_contract(psi, aq, selector, 1.0));
    }

    for (int i = 0; i < mesh.cells; ++i) {
        for (int node = 0; node < 2; ++node) {
            const double x = node == 0 ? mesh.x_left(i) : mesh.x_right(i);
            out << format_g17(x) << ',' << format_g17(phi(i, node)) << ','
                << format_g17(f(i, node));
            for (const ScalarField& column : moments) {
                out << ',' << format_g17(column(i, node));
            }
            out << "\n";
        }
    }
}

inline void write_report_csv(std::ostream& out, const SolveReport& report,
                             double wall_seconds) {
    out << "iterations,converged,rho_estimate,wall_time_seconds\n";
    out << report.iterations << ',' << (report.converged ? 1 : 0) << ','
        << format_g17(report.spectral_radius_estimate) << ','
        << format_g17(wall_seconds) << "\n";
}

struct ScanRow {
    double c = 0.0;
    std::string solver;
    int iterations = 0;
    double rho_estimate = 0.0;
};

inline void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
    out << "c,solver,iterations,rho_estimate\n";
    for (const ScanRow& row : rows) {
        out << format_g17(row.c) << ',' << row.solver << ',' << row.iterations
            << ',' << format_g17(row.rho_estimate) << "\n";
    }
}

}  // namespace ncsn
