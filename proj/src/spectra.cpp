#include "hdx/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hdx {

std::vector<double> symmetric_eigenvalues_desc(const Eigen::MatrixXd& a, double sym_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigenvalues_desc: matrix not square");
    const double residual = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (residual > sym_tol)
        throw std::runtime_error("symmetric_eigenvalues_desc: symmetry residual " + std::to_string(residual) +
                                 " exceeds tolerance");
    Eigen::MatrixXd sym = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric_eigenvalues_desc: eigensolver did not converge");
    std::vector<double> evals(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::reverse(evals.begin(), evals.end());
    return evals;
}

std::vector<double> general_eigenvalues_desc(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("general_eigenvalues_desc: matrix not square");
    Eigen::EigenSolver<Eigen::MatrixXd> es(a, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("general_eigenvalues_desc: eigensolver did not converge");
    std::vector<double> evals(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) evals[i] = es.eigenvalues()[i].real();
    std::sort(evals.rbegin(), evals.rend());
    return evals;
}

bool nonzero_spectra_match(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() < b.size()) std::swap(a, b);
    std::sort(a.rbegin(), a.rend());
    std::sort(b.rbegin(), b.rend());
    // Drop the |a|-|b| entries of smallest magnitude from the longer list.
    std::size_t extra = a.size() - b.size();
    if (extra > 0) {
        std::vector<std::size_t> idx(a.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t i, std::size_t j) { return std::fabs(a[i]) < std::fabs(a[j]); });
        std::vector<bool> drop(a.size(), false);
        for (std::size_t i = 0; i < extra; ++i) drop[idx[i]] = true;
        std::vector<double> kept;
        kept.reserve(b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!drop[i]) kept.push_back(a[i]);
        a = std::move(kept);
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace hdx
