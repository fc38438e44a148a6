#pragma once

#include <cstddef>
#include <vector>

namespace netfit {

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues descending; eigenvectors are the columns, i.e. vectors[i][k]
/// is component i of eigenvector k.
struct SymmetricEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};
SymmetricEigen jacobi_eigen(std::vector<std::vector<double>> matrix, double tolerance = 1e-14,
                            std::size_t max_sweeps = 100);

}  // namespace netfit
