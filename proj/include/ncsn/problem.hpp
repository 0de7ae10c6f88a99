// Problem configuration shared by the solvers and the CLI.
#pragma once

#include <stdexcept>
#include <string>

#include "freepath.hpp"

namespace ncsn {

enum class SolverKind { SI, S2SA };

// Relative deviation measure used by the stopping test. L2 is the default;
// Pointwise takes the maximum relative change over all grid nodes.
enum class StoppingNorm { L2, Pointwise };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemConfig {
    double X = 20.0;
    int cells = 200;
    int N = 16;
    int M = 10;
    double c = 0.0;
    double sigma_t = 1.0;
    ModelKind model = ModelKind::Exponential;
    double q = 1.0;
    double xi = 1e-6;
    SolverKind solver = SolverKind::SI;
    int max_iterations = 100000;
    // Node count of the free-path moment quadrature; 0 means "use M".
    int s_quad_nodes = 0;
    StoppingNorm stopping_norm = StoppingNorm::L2;

    [[nodiscard]] int moment_quad_nodes() const {
        return s_quad_nodes > 0 ? s_quad_nodes : M;
    }
    [[nodiscard]] FreePathModel free_path_model() const {
        return FreePathModel{model, sigma_t};
    }
};

inline void validate(const ProblemConfig& cfg) {
    if (!(cfg.X > 0.0)) {
        throw ConfigError("x must be positive");
    }
    if (cfg.cells < 1) {
        throw ConfigError("cells must be positive");
    }
    if (cfg.N < 2 || cfg.N % 2 != 0) {
        throw ConfigError("n must be even and >= 2");
    }
    if (cfg.M < 0) {
        throw ConfigError("m must be nonnegative");
    }
    if (!(cfg.c >= 0.0 && cfg.c < 1.0)) {
        throw ConfigError("c must lie in [0,1)");
    }
    if (!(cfg.sigma_t > 0.0)) {
        throw ConfigError("sigma_t must be positive");
    }
    if (!(cfg.q >= 0.0)) {
        throw ConfigError("q must be nonnegative");
    }
    if (!(cfg.xi > 0.0)) {
        throw ConfigError("xi must be positive");
    }
    if (cfg.max_iterations < 1) {
        throw ConfigError("max_iterations must be positive");
    }
    if (cfg.s_quad_nodes < 0) {
        throw ConfigError("s_quad_nodes must be nonnegative (0 selects M)");
    }
    if (cfg.moment_quad_nodes() < 1) {
        throw ConfigError("s_quad_nodes must resolve to at least one node");
    }
}

}  // namespace ncsn
