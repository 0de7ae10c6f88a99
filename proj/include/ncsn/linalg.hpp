// Small dense and banded direct solvers for the low-order acceleration
// system and the diffusion reference.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ncsn {

// Dense LU factorization with partial pivoting, row-major storage.
class DenseLU {
  public:
    DenseLU() = default;

    DenseLU(std::size_t n, std::vector<double> matrix)
        : n_(n), lu_(std::move(matrix)), perm_(n) {
        if (lu_.size() != n * n) {
            throw std::invalid_argument("DenseLU: matrix size mismatch");
        }
        for (std::size_t i = 0; i < n; ++i) {
            perm_[i] = i;
        }
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pivot = k;
            double best = std::abs(lu_[k * n + k]);
            for (std::size_t i = k + 1; i < n; ++i) {
                const double cand = std::abs(lu_[i * n + k]);
                if (cand > best) {
                    best = cand;
                    pivot = i;
                }
            }
            if (best == 0.0 || !std::isfinite(best)) {
                throw std::runtime_error("DenseLU: singular matrix");
            }
            if (pivot != k) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(lu_[k * n + j], lu_[pivot * n + j]);
                }
                std::swap(perm_[k], perm_[pivot]);
            }
            const double inv_pivot = 1.0 / lu_[k * n + k];
            for (std::size_t i = k + 1; i < n; ++i) {
                const double factor = lu_[i * n + k] * inv_pivot;
                lu_[i * n + k] = factor;
                for (std::size_t j = k + 1; j < n; ++j) {
                    lu_[i * n + j] -= factor * lu_[k * n + j];
                }
            }
        }
    }

    [[nodiscard]] std::vector<double> solve(const std::vector<double>& rhs) const {
        if (rhs.size() != n_) {
            throw std::invalid_argument("DenseLU::solve: size mismatch");
        }
        std::vector<double> x(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            x[i] = rhs[perm_[i]];
        }
        for (std::size_t i = 1; i < n_; ++i) {
            double acc = x[i];
            for (std::size_t j = 0; j < i; ++j) {
                acc -= lu_[i * n_ + j] * x[j];
            }
            x[i] = acc;
        }
        for (std::size_t ii = n_; ii > 0; --ii) {
            const std::size_t i = ii - 1;
            double acc = x[i];
            for (std::size_t j = i + 1; j < n_; ++j) {
                acc -= lu_[i * n_ + j] * x[j];
            }
            x[i] = acc / lu_[i * n_ + i];
        }
        return x;
    }

    [[nodiscard]] std::size_t size() const { return n_; }

  private:
    std::size_t n_ = 0;
    std::vector<double> lu_;
    std::vector<std::size_t> perm_;
};

// Thomas algorithm; lower[0] and upper[n-1] are unused.
inline std::vector<double> tridiagonal_solve(std::vector<double> lower,
                                             std::vector<double> diag,
                                             std::vector<double> upper,
                                             std::vector<double> rhs) {
    const std::size_t n = diag.size();
    if (lower.size() != n || upper.size() != n || rhs.size() != n || n == 0) {
        throw std::invalid_argument("tridiagonal_solve: size mismatch");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0) {
            throw std::runtime_error("tridiagonal_solve: zero pivot");
        }
        const double factor = lower[i] / diag[i - 1];
        diag[i] -= factor * upper[i - 1];
        rhs[i] -= factor * rhs[i - 1];
    }
    if (diag[n - 1] == 0.0) {
        throw std::runtime_error("tridiagonal_solve: zero pivot");
    }
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t ii = n - 1; ii > 0; --ii) {
        const std::size_t i = ii - 1;
        x[i] = (rhs[i] - upper[i] * x[i + 1]) / diag[i];
    }
    return x;
}

}  // namespace ncsn
