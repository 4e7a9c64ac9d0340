#pragma once

#include <Eigen/Dense>

#include <vector>

namespace hdx {

/// Eigenvalues of a symmetric matrix in descending order. Throws when the
/// input deviates from symmetry by more than sym_tol or the solver fails.
std::vector<double> symmetric_eigenvalues_desc(const Eigen::MatrixXd& a, double sym_tol = 1e-10);

/// Real parts of the eigenvalues of a general square matrix, descending.
/// Used as an independent cross-check of the symmetrized path.
std::vector<double> general_eigenvalues_desc(const Eigen::MatrixXd& a);

/// True when two descending spectra agree on their nonzero parts within tol.
/// The longer list may carry |size difference| additional (near-)zero entries;
/// those closest to zero are discarded before the elementwise comparison.
bool nonzero_spectra_match(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace hdx
