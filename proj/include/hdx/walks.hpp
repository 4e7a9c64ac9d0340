#pragma once

#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace hdx {

enum class WalkKind { Up, Down, UpDown, DownUp };

std::string walk_kind_str(WalkKind k);

/// Column-stochastic walk operator between complex levels, assembled in exact
/// rational arithmetic. Columns index the domain level, rows the codomain.
struct WalkOperator {
    WalkKind kind = WalkKind::Up;
    int level = 0;  // domain dimension
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries;  // sorted by row

    Rational entry(std::size_t row, std::size_t col) const;  // 0 when absent
    std::size_t nonzeros() const;
};

WalkOperator up_step(const Complex& c, int k);    // -1 <= k <= H-1, entries m(tau)/m(sigma)
WalkOperator down_step(const Complex& c, int k);  // 0 <= k <= H, entries 1/(k+1)
WalkOperator updown(const Complex& c, int k);     // 0 <= k <= H-1
WalkOperator downup(const Complex& c, int k);     // 1 <= k <= H

/// Sparse rational product a*b (apply b first).
WalkOperator compose(const WalkOperator& a, const WalkOperator& b);

/// Exact check that every column sums to 1.
bool columns_stochastic(const WalkOperator& w);

struct StationaryMeasure {
    int level = 0;
    std::vector<Rational> pi;  // m(sigma) / total, sums to 1
};
StationaryMeasure stationary_measure(const Complex& c, int k);

/// Exact detailed-balance check pi(sigma) W(tau,sigma) = pi(tau) W(sigma,tau).
bool detailed_balance(const WalkOperator& w, const StationaryMeasure& pi);

struct SpectrumOptions {
    double sym_tol = 1e-10;
    std::size_t max_dim = 20000;
};

struct SpectrumReport {
    int level = 0;
    WalkKind kind = WalkKind::UpDown;
    std::vector<double> eigenvalues;  // descending
    double gap = 0.0;                 // 1 - eigenvalues[1]
    double sym_residual = 0.0;
};

/// Spectrum of a reversible square operator through the diag(pi)^{+-1/2}
/// conjugation. Reversibility is verified exactly before symmetrizing.
SpectrumReport operator_spectrum(const WalkOperator& w, const StationaryMeasure& pi,
                                 const SpectrumOptions& opt = {});

Eigen::MatrixXd to_dense(const WalkOperator& w);

std::vector<double> point_mass(std::size_t n, std::size_t at);

/// Exact distribution evolution: total-variation distance to pi after each of
/// `steps` applications of the operator.
std::vector<double> evolve(const WalkOperator& w, const StationaryMeasure& pi, std::vector<double> p0,
                           int steps);

/// Steps until the TV distance drops below `threshold` (max_steps+1 if never).
int steps_to_tv(const WalkOperator& w, const StationaryMeasure& pi, const std::vector<double>& p0,
                double threshold, int max_steps);

/// Seeded trajectory sampler; demonstration output only, never used by checks.
std::vector<std::size_t> sample_walk(const WalkOperator& w, std::size_t start, int steps, std::uint64_t seed);

}  // namespace hdx
