#pragma once

#include <vector>

#include "chebfilter/dense.hpp"
#include "chebfilter/operators.hpp"

namespace chebfilter {

/// Full symmetric eigendecomposition M = U diag(values) U^T.
/// Eigenvalues ascending; column i of U pairs with values[i]; columns are
/// orthonormal and deterministically signed (largest-magnitude entry
/// positive, first such index on ties).
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    DenseMatrix eigenvectors;  // n x n, column-major pairing

    std::size_t size() const { return eigenvalues.size(); }
};

/// Cyclic Jacobi rotations on a dense symmetric matrix. Converges when the
/// off-diagonal Frobenius norm drops below 1e-12 (relative to the input
/// scale), at most 100 sweeps.
EigenDecomposition jacobi_eigendecompose(DenseMatrix m);

/// Densify the operator and run the Jacobi solver. Dense path, capped at
/// n = 3000; larger graphs get a capacity error.
EigenDecomposition eigendecompose(const SpectralOperator& op);

inline constexpr std::size_t kEigenMaxNodes = 3000;

}  // namespace chebfilter
