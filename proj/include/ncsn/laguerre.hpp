// Laguerre polynomial evaluation via the stable three-term recurrence.
#pragma once

#include <stdexcept>
#include <vector>

namespace ncsn {

// L_m(s) with (m+1) L_{m+1} = (2m+1-s) L_m - m L_{m-1}, L_0 = 1, L_1 = 1-s.
inline double laguerre_eval(int m, double s) {
    if (m < 0) {
        throw std::invalid_argument("laguerre_eval: order must be >= 0");
    }
    if (s < 0.0) {
        throw std::invalid_argument("laguerre_eval: s must be >= 0");
    }
    double lm1 = 1.0;
    if (m == 0) {
        return lm1;
    }
    double lm = 1.0 - s;
    for (int k = 1; k < m; ++k) {
        const double next = ((2.0 * k + 1.0 - s) * lm - k * lm1) / (k + 1.0);
        lm1 = lm;
        lm = next;
    }
    return lm;
}

// Fills out[0..M] with L_0(s)..L_M(s) in one pass of the recurrence.
inline void laguerre_all(int M, double s, double* out) {
    if (M < 0) {
        throw std::invalid_argument("laguerre_all: order must be >= 0");
    }
    if (s < 0.0) {
        throw std::invalid_argument("laguerre_all: s must be >= 0");
    }
    out[0] = 1.0;
    if (M == 0) {
        return;
    }
    out[1] = 1.0 - s;
    for (int k = 1; k < M; ++k) {
        out[k + 1] = ((2.0 * k + 1.0 - s) * out[k] - k * out[k - 1]) / (k + 1.0);
    }
}

inline std::vector<double> laguerre_all(int M, double s) {
    std::vector<double> out(static_cast<std::size_t>(M) + 1);
    laguerre_all(M, s, out.data());
    return out;
}

}  // namespace ncsn
