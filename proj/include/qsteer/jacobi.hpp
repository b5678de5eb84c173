#pragma once

#include <vector>

namespace qsteer {

/// Cyclic Jacobi eigendecomposition of a small dense real symmetric matrix.
///
/// `a` is row-major n*n; only the upper triangle is read, the lower is
/// assumed to mirror it. Eigenvalues come back ascending. When
/// `eigenvectors` is non-null it is resized to n*n and filled with the
/// matching eigenvector in column k (row-major, orthonormal columns).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n,
                                       std::vector<double>* eigenvectors = nullptr);

} // namespace qsteer
