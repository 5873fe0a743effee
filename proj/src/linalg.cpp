#include "apts/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace apts {

void cholesky_lower_into(const SquareMatrix& spd, SquareMatrix& L) {
    const std::size_t n = spd.n;
    std::fill(L.a.begin(), L.a.end(), 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double d = spd.at(j, j);
        for (std::size_t k = 0; k < j; ++k) {
            d -= L.at(j, k) * L.at(j, k);
        }
        if (!(d > 0.0)) {
            throw NotPositiveDefinite("nonpositive pivot in Cholesky factorization");
        }
        L.at(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = spd.at(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= L.at(i, k) * L.at(j, k);
            }
            L.at(i, j) = s / L.at(j, j);
        }
    }
}

SquareMatrix cholesky_lower(const SquareMatrix& spd) {
    SquareMatrix L(spd.n);
    cholesky_lower_into(spd, L);
    return L;
}

namespace {

double logdet_from_factor(const SquareMatrix& L) {
    double s = 0.0;
    for (std::size_t i = 0; i < L.n; ++i) {
        s += std::log(L.at(i, i));
    }
    return 2.0 * s;
}

double inverse_trace_from_factor(const SquareMatrix& L, std::vector<double>& col) {
    const std::size_t n = L.n;
    // Column j of L^{-1} by forward substitution against e_j; only rows >= j
    // are nonzero. Tr(A^{-1}) = ||L^{-1}||_F^2.
    col.assign(n, 0.0);
    double trace = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j; i < n; ++i) {
            double s = (i == j) ? 1.0 : 0.0;
            for (std::size_t k = j; k < i; ++k) {
                s -= L.at(i, k) * col[k];
            }
            col[i] = s / L.at(i, i);
            trace += col[i] * col[i];
        }
    }
    return trace;
}

} // namespace

double logdet_spd(const SquareMatrix& spd) {
    return logdet_from_factor(cholesky_lower(spd));
}

double inverse_trace_spd(const SquareMatrix& spd) {
    std::vector<double> col;
    return inverse_trace_from_factor(cholesky_lower(spd), col);
}

SpdStats spd_stats(const SquareMatrix& spd) {
    SquareMatrix L(spd.n);
    std::vector<double> col;
    return spd_stats_into(spd, L, col);
}

SpdStats spd_stats_into(const SquareMatrix& spd, SquareMatrix& L_scratch,
                        std::vector<double>& col_scratch) {
    cholesky_lower_into(spd, L_scratch);
    return {logdet_from_factor(L_scratch), inverse_trace_from_factor(L_scratch, col_scratch)};
}

} // namespace apts
