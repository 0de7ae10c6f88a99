// Free-path distribution models p(s), their ensemble cross sections
// Sigma_t(s), survival factors, and the Laguerre moment integrals that
// couple the s-dependence into the spectral equations.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "laguerre.hpp"
#include "quadrature.hpp"

namespace ncsn {

enum class ModelKind {
    Exponential,    // p(s) = sigma_t exp(-sigma_t s), classical medium
    DiffusionMimic  // p(s) = 3 sigma_t^2 s exp(-sqrt(3) sigma_t s)
};

struct FreePathModel {
    ModelKind kind = ModelKind::Exponential;
    double sigma_t = 1.0;
};

inline constexpr double kSqrt3 = 1.7320508075688772;

inline double p_of_s(const FreePathModel& model, double s) {
    const double st = model.sigma_t;
    if (model.kind == ModelKind::Exponential) {
        return st * std::exp(-st * s);
    }
    return 3.0 * st * st * s * std::exp(-kSqrt3 * st * s);
}

inline double sigma_t_of_s(const FreePathModel& model, double s) {
    const double st = model.sigma_t;
    if (model.kind == ModelKind::Exponential) {
        return st;
    }
    return 3.0 * st * st * s / (1.0 + kSqrt3 * st * s);
}

// exp(-integral_0^s Sigma_t), in closed form for both models.
inline double survival(const FreePathModel& model, double s) {
    const double st = model.sigma_t;
    if (model.kind == ModelKind::Exponential) {
        return std::exp(-st * s);
    }
    return (1.0 + kSqrt3 * st * s) * std::exp(-kSqrt3 * st * s);
}

// c_k = integral p(s) L_k(s) ds drive the scattering source; r_m =
// integral L_m(s) survival(s) ds recover classical fluxes.
struct MomentCoefficients {
    std::vector<double> c;
    std::vector<double> r;
};

// Shared rule for the improper s-integrals: Gauss-Legendre on [0, 1.5 X].
inline QuadratureRule free_path_quadrature(int nodes, double slab_length) {
    if (nodes < 1) {
        throw std::invalid_argument("free_path_quadrature: node count must be >= 1");
    }
    if (!(slab_length > 0.0)) {
        throw std::invalid_argument("free_path_quadrature: slab length must be positive");
    }
    return gauss_legendre(nodes, 0.0, 1.5 * slab_length);
}

inline MomentCoefficients compute_moments(const FreePathModel& model, int M,
                                          const QuadratureRule& quad) {
    if (M < 0) {
        throw std::invalid_argument("compute_moments: order must be >= 0");
    }
    if (quad.size() == 0) {
        throw std::invalid_argument("compute_moments: empty quadrature");
    }
    MomentCoefficients mc;
    mc.c.assign(static_cast<std::size_t>(M) + 1, 0.0);
    mc.r.assign(static_cast<std::size_t>(M) + 1, 0.0);
    std::vector<double> lag(static_cast<std::size_t>(M) + 1);
    for (std::size_t q = 0; q < quad.size(); ++q) {
        const double s = quad.nodes[q];
        const double wp = quad.weights[q] * p_of_s(model, s);
        const double wsur = quad.weights[q] * survival(model, s);
        laguerre_all(M, s, lag.data());
        for (int m = 0; m <= M; ++m) {
            mc.c[static_cast<std::size_t>(m)] += wp * lag[static_cast<std::size_t>(m)];
            mc.r[static_cast<std::size_t>(m)] += wsur * lag[static_cast<std::size_t>(m)];
        }
    }
    return mc;
}

}  // namespace ncsn
