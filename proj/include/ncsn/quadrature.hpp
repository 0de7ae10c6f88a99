// Gauss-Legendre quadrature rules and the discrete-ordinates angular set.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ncsn {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    [[nodiscard]] std::size_t size() const { return nodes.size(); }
};

// Gauss-Legendre rule on [-1,1]. Roots of P_n found by Newton iteration on
// the Legendre recurrence, seeded with the Chebyshev-like estimate.
inline QuadratureRule gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: order must be >= 1");
    }
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        bool converged = false;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(x) and P_n'(x) by upward recurrence.
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 =
                    ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw std::runtime_error("gauss_legendre: Newton iteration failed");
        }
        // One clean-up step so nodes and weights agree to full precision.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // The seed ordering above yields descending nodes; store ascending.
    std::vector<double> xs(rule.nodes.rbegin(), rule.nodes.rend());
    std::vector<double> ws(rule.weights.rbegin(), rule.weights.rend());
    rule.nodes = std::move(xs);
    rule.weights = std::move(ws);
    // n = 1 has the exact midpoint rule; Newton leaves x = 0 untouched but
    // the derivative formula above divides by x^2 - 1 = -1, which is fine.
    if (n == 1) {
        rule.nodes[0] = 0.0;
        rule.weights[0] = 2.0;
    }
    return rule;
}

// Same rule mapped affinely onto [a,b]; weights sum to b-a.
inline QuadratureRule gauss_legendre(int n, double a, double b) {
    if (!(a < b)) {
        throw std::invalid_argument("gauss_legendre: interval must satisfy a < b");
    }
    QuadratureRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        rule.nodes[i] = mid + half * rule.nodes[i];
        rule.weights[i] *= half;
    }
    return rule;
}

// Discrete-ordinates set: Gauss-Legendre on [-1,1] with the positive
// directions stored first (indices 0..N/2-1), mirrored negatives after.
struct AngularQuadrature {
    int N = 0;
    std::vector<double> mu;
    std::vector<double> w;
};

inline AngularQuadrature angular_quadrature(int N) {
    if (N < 2 || N % 2 != 0) {
        throw std::invalid_argument("angular_quadrature: N must be even and >= 2");
    }
    const QuadratureRule rule = gauss_legendre(N);
    AngularQuadrature aq;
    aq.N = N;
    aq.mu.resize(static_cast<std::size_t>(N));
    aq.w.resize(static_cast<std::size_t>(N));
    const int half = N / 2;
    // Ascending rule: the last half are the positive nodes.
    for (int k = 0; k < half; ++k) {
        const std::size_t src = static_cast<std::size_t>(half + k);
        aq.mu[static_cast<std::size_t>(k)] = rule.nodes[src];
        aq.w[static_cast<std::size_t>(k)] = rule.weights[src];
        aq.mu[static_cast<std::size_t>(half + k)] = -rule.nodes[src];
        aq.w[static_cast<std::size_t>(half + k)] = rule.weights[src];
    }
    return aq;
}

}  // namespace ncsn
