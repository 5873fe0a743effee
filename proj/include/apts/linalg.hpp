#pragma once

#include <cstddef>
#include <vector>

#include "apts/errors.hpp"

namespace apts {

/// Dense row-major square matrix, just big enough for the small symmetric
/// systems the Gaussian baseline needs.
struct SquareMatrix {
    std::size_t n = 0;
    std::vector<double> a; ///< n*n, row major

    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim) : n(dim), a(dim * dim, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// Throws NotPositiveDefinite on a nonpositive pivot.
SquareMatrix cholesky_lower(const SquareMatrix& spd);

/// Allocation-free variant for hot loops; L must already have spd's shape.
void cholesky_lower_into(const SquareMatrix& spd, SquareMatrix& L);

/// log det A = 2 * sum log L_ii.
double logdet_spd(const SquareMatrix& spd);

/// Tr(A^{-1}) via triangular solves: with A = L L^T the trace equals the
/// squared Frobenius norm of L^{-1}.
double inverse_trace_spd(const SquareMatrix& spd);

/// Both quantities from a single factorization.
struct SpdStats {
    double logdet = 0.0;
    double inverse_trace = 0.0;
};
SpdStats spd_stats(const SquareMatrix& spd);

/// Allocation-free variant: L and column. scratch are reused across calls.
SpdStats spd_stats_into(const SquareMatrix& spd, SquareMatrix& L_scratch,
                        std::vector<double>& col_scratch);

} // namespace apts
