// Recovery of classical quantities from the spectral moment solution.
#pragma once

#include <stdexcept>
#include <vector>

#include "freepath.hpp"
#include "laguerre.hpp"
#include "mesh.hpp"
#include "quadrature.hpp"
#include "sweep.hpp"

namespace ncsn {

// Psi_c,n(x) = sum_m r_m psi_{m,n}(x), one nodal field per angle.
inline std::vector<ScalarField> classical_angular_flux(
    const MomentField& psi, const MomentCoefficients& mc) {
    if (mc.r.size() != static_cast<std::size_t>(psi.M) + 1) {
        throw std::invalid_argument("classical_angular_flux: weight count mismatch");
    }
    std::vector<ScalarField> out(static_cast<std::size_t>(psi.N),
                                 ScalarField(psi.cells));
    for (int n = 0; n < psi.N; ++n) {
        ScalarField& field = out[static_cast<std::size_t>(n)];
        for (int i = 0; i < psi.cells; ++i) {
            for (int node = 0; node < 2; ++node) {
                const double* mom = psi.moments(n, i, node);
                double acc = 0.0;
                for (int m = 0; m <= psi.M; ++m) {
                    acc += mc.r[static_cast<std::size_t>(m)] * mom[m];
                }
                field(i, node) = acc;
            }
        }
    }
    return out;
}

// Phi(x) = sum_n w_n Psi_c,n(x).
inline ScalarField scalar_flux(const std::vector<ScalarField>& angular,
                               const AngularQuadrature& aq) {
    if (angular.size() != static_cast<std::size_t>(aq.N) || angular.empty()) {
        throw std::invalid_argument("scalar_flux: angle count mismatch");
    }
    ScalarField out(angular.front().cells, 0.0);
    for (int n = 0; n < aq.N; ++n) {
        const ScalarField& field = angular[static_cast<std::size_t>(n)];
        for (std::size_t j = 0; j < out.size(); ++j) {
            out.data[j] += aq.w[static_cast<std::size_t>(n)] * field.data[j];
        }
    }
    return out;
}

// Direct contraction used by the iteration loops.
inline ScalarField scalar_flux(const MomentField& psi, const AngularQuadrature& aq,
                               const MomentCoefficients& mc) {
    return angle_moment_contract(psi, aq, mc.r, 1.0);
}

// f(x) = sum_n w_n sum_m c_m psi_{m,n}(x), the collision-rate density.
inline ScalarField collision_rate_density(const MomentField& psi,
                                          const AngularQuadrature& aq,
                                          const MomentCoefficients& mc) {
    return angle_moment_contract(psi, aq, mc.c, 1.0);
}

// Psi(x_node, mu_n, s) = [sum_m psi_{m,n} L_m(s)] survival(s).
inline double reconstruct_nonclassical_flux(const MomentField& psi,
                                            const FreePathModel& model, int cell,
                                            int node, int angle, double s) {
    const double* mom = psi.moments(angle, cell, node);
    std::vector<double> lag = laguerre_all(psi.M, s);
    double acc = 0.0;
    for (int m = 0; m <= psi.M; ++m) {
        acc += mom[m] * lag[static_cast<std::size_t>(m)];
    }
    return acc * survival(model, s);
}

}  // namespace ncsn
