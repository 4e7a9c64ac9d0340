#include "hdx/walks.hpp"

#include "hdx/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hdx {

std::string walk_kind_str(WalkKind k) {
    switch (k) {
        case WalkKind::Up: return "up";
        case WalkKind::Down: return "down";
        case WalkKind::UpDown: return "updown";
        case WalkKind::DownUp: return "downup";
    }
    return "?";
}

Rational WalkOperator::entry(std::size_t row, std::size_t col) const {
    const auto& entries = col_entries[col];
    auto it = std::lower_bound(entries.begin(), entries.end(), row,
                               [](const auto& e, std::size_t r) { return e.first < r; });
    if (it != entries.end() && it->first == row) return it->second;
    return 0;
}

std::size_t WalkOperator::nonzeros() const {
    std::size_t n = 0;
    for (const auto& col : col_entries) n += col.size();
    return n;
}

namespace {

void sort_columns(WalkOperator& w) {
    for (auto& col : w.col_entries)
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

}  // namespace

WalkOperator up_step(const Complex& c, int k) {
    if (k < -1 || k > c.H - 1) throw std::invalid_argument("up_step: level out of range");
    const Level& dom = c.level(k);
    const Level& cod = c.level(k + 1);
    WalkOperator w;
    w.kind = WalkKind::Up;
    w.level = k;
    w.rows = cod.size();
    w.cols = dom.size();
    w.col_entries.resize(w.cols);
    Face facet;
    for (std::size_t r = 0; r < cod.size(); ++r) {
        const Face& tau = cod.faces[r];
        facet.verts.resize(tau.verts.size() - 1);
        for (std::size_t drop = 0; drop < tau.verts.size(); ++drop) {
            std::size_t at = 0;
            for (std::size_t i = 0; i < tau.verts.size(); ++i)
                if (i != drop) facet.verts[at++] = tau.verts[i];
            std::size_t col = dom.find(facet);
            if (col == Level::npos) throw std::logic_error("up_step: missing facet " + face_str(facet));
            w.col_entries[col].push_back({r, Rational(cod.weights[r] / dom.weights[col])});
        }
    }
    sort_columns(w);
    return w;
}

WalkOperator down_step(const Complex& c, int k) {
    if (k < 0 || k > c.H) throw std::invalid_argument("down_step: level out of range");
    const Level& dom = c.level(k);
    const Level& cod = c.level(k - 1);
    WalkOperator w;
    w.kind = WalkKind::Down;
    w.level = k;
    w.rows = cod.size();
    w.cols = dom.size();
    w.col_entries.resize(w.cols);
    const Rational val = make_rational(1, k + 1);
    Face facet;
    for (std::size_t col = 0; col < dom.size(); ++col) {
        const Face& sigma = dom.faces[col];
        facet.verts.resize(sigma.verts.size() - 1);
        for (std::size_t drop = 0; drop < sigma.verts.size(); ++drop) {
            std::size_t at = 0;
            for (std::size_t i = 0; i < sigma.verts.size(); ++i)
                if (i != drop) facet.verts[at++] = sigma.verts[i];
            std::size_t r = cod.find(facet);
            if (r == Level::npos) throw std::logic_error("down_step: missing facet " + face_str(facet));
            w.col_entries[col].push_back({r, val});
        }
    }
    sort_columns(w);
    return w;
}

WalkOperator compose(const WalkOperator& a, const WalkOperator& b) {
    if (a.cols != b.rows) throw std::invalid_argument("compose: dimension mismatch");
    WalkOperator w;
    w.rows = a.rows;
    w.cols = b.cols;
    w.col_entries.resize(w.cols);
    std::vector<Rational> work(a.rows, Rational(0));
    std::vector<std::size_t> touched;
    for (std::size_t col = 0; col < b.cols; ++col) {
        touched.clear();
        for (const auto& [mid, bv] : b.col_entries[col]) {
            for (const auto& [row, av] : a.col_entries[mid]) {
                if (work[row] == 0) touched.push_back(row);
                work[row] += av * bv;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& out = w.col_entries[col];
        out.reserve(touched.size());
        for (std::size_t row : touched) {
            if (work[row] != 0) out.push_back({row, work[row]});
            work[row] = 0;
        }
    }
    return w;
}

WalkOperator updown(const Complex& c, int k) {
    if (k < 0 || k > c.H - 1) throw std::invalid_argument("updown: level out of range");
    WalkOperator w = compose(down_step(c, k + 1), up_step(c, k));
    w.kind = WalkKind::UpDown;
    w.level = k;
    return w;
}

WalkOperator downup(const Complex& c, int k) {
    if (k < 1 || k > c.H) throw std::invalid_argument("downup: level out of range");
    WalkOperator w = compose(up_step(c, k - 1), down_step(c, k));
    w.kind = WalkKind::DownUp;
    w.level = k;
    return w;
}

bool columns_stochastic(const WalkOperator& w) {
    for (const auto& col : w.col_entries) {
        Rational sum = 0;
        for (const auto& [row, v] : col) sum += v;
        if (sum != 1) return false;
    }
    return true;
}

StationaryMeasure stationary_measure(const Complex& c, int k) {
    const Level& lv = c.level(k);
    if (lv.total <= 0) throw std::invalid_argument("stationary_measure: empty level");
    StationaryMeasure pi;
    pi.level = k;
    pi.pi.reserve(lv.size());
    for (const auto& m : lv.weights) pi.pi.push_back(Rational(m / lv.total));
    return pi;
}

bool detailed_balance(const WalkOperator& w, const StationaryMeasure& pi) {
    if (w.rows != w.cols || w.cols != pi.pi.size())
        throw std::invalid_argument("detailed_balance: operator/measure mismatch");
    for (std::size_t col = 0; col < w.cols; ++col)
        for (const auto& [row, v] : w.col_entries[col]) {
            if (row < col) continue;  // symmetric pair is checked once
            if (pi.pi[col] * v != pi.pi[row] * w.entry(col, row)) return false;
        }
    return true;
}

Eigen::MatrixXd to_dense(const WalkOperator& w) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(w.rows),
                                              static_cast<Eigen::Index>(w.cols));
    for (std::size_t col = 0; col < w.cols; ++col)
        for (const auto& [row, v] : w.col_entries[col])
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = to_double(v);
    return m;
}

SpectrumReport operator_spectrum(const WalkOperator& w, const StationaryMeasure& pi,
                                 const SpectrumOptions& opt) {
    if (w.rows != w.cols) throw std::invalid_argument("operator_spectrum: operator not square");
    if (w.cols != pi.pi.size()) throw std::invalid_argument("operator_spectrum: measure size mismatch");
    if (w.cols > opt.max_dim)
        throw std::invalid_argument("operator_spectrum: dimension " + std::to_string(w.cols) +
                                    " exceeds cap " + std::to_string(opt.max_dim));
    if (!detailed_balance(w, pi)) throw std::runtime_error("operator_spectrum: operator not reversible");

    const Eigen::Index n = static_cast<Eigen::Index>(w.cols);
    std::vector<double> sqrt_pi(w.cols);
    for (std::size_t i = 0; i < w.cols; ++i) sqrt_pi[i] = std::sqrt(to_double(pi.pi[i]));

    Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t col = 0; col < w.cols; ++col)
        for (const auto& [row, v] : w.col_entries[col])
            sym(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                to_double(v) * sqrt_pi[col] / sqrt_pi[row];

    SpectrumReport rep;
    rep.level = w.level;
    rep.kind = w.kind;
    rep.sym_residual = (sym - sym.transpose()).cwiseAbs().maxCoeff();
    rep.eigenvalues = symmetric_eigenvalues_desc(sym, opt.sym_tol);
    if (std::fabs(rep.eigenvalues.front() - 1.0) > 1e-9)
        throw std::runtime_error("operator_spectrum: leading eigenvalue deviates from 1 by " +
                                 std::to_string(std::fabs(rep.eigenvalues.front() - 1.0)));
    rep.gap = rep.eigenvalues.size() > 1 ? 1.0 - rep.eigenvalues[1] : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

std::vector<double> point_mass(std::size_t n, std::size_t at) {
    if (at >= n) throw std::invalid_argument("point_mass: index out of range");
    std::vector<double> p(n, 0.0);
    p[at] = 1.0;
    return p;
}

std::vector<double> evolve(const WalkOperator& w, const StationaryMeasure& pi, std::vector<double> p,
                           int steps) {
    if (w.rows != w.cols || p.size() != w.cols || pi.pi.size() != w.cols)
        throw std::invalid_argument("evolve: dimension mismatch");
    // double shadow of the sparse operator
    std::vector<std::vector<std::pair<std::size_t, double>>> cols(w.cols);
    for (std::size_t c = 0; c < w.cols; ++c) {
        cols[c].reserve(w.col_entries[c].size());
        for (const auto& [row, v] : w.col_entries[c]) cols[c].push_back({row, to_double(v)});
    }
    std::vector<double> pi_d(w.cols);
    for (std::size_t i = 0; i < w.cols; ++i) pi_d[i] = to_double(pi.pi[i]);

    auto tv = [&](const std::vector<double>& q) {
        double sum = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) sum += std::fabs(q[i] - pi_d[i]);
        return 0.5 * sum;
    };

    std::vector<double> trace;
    trace.reserve(steps);
    std::vector<double> next(w.cols);
    for (int t = 0; t < steps; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t c = 0; c < w.cols; ++c) {
            const double pc = p[c];
            if (pc == 0.0) continue;
            for (const auto& [row, v] : cols[c]) next[row] += v * pc;
        }
        p.swap(next);
        trace.push_back(tv(p));
    }
    return trace;
}

int steps_to_tv(const WalkOperator& w, const StationaryMeasure& pi, const std::vector<double>& p0,
                double threshold, int max_steps) {
    if (w.rows != w.cols || p0.size() != w.cols || pi.pi.size() != w.cols)
        throw std::invalid_argument("steps_to_tv: dimension mismatch");
    std::vector<std::vector<std::pair<std::size_t, double>>> cols(w.cols);
    for (std::size_t c = 0; c < w.cols; ++c) {
        cols[c].reserve(w.col_entries[c].size());
        for (const auto& [row, v] : w.col_entries[c]) cols[c].push_back({row, to_double(v)});
    }
    std::vector<double> pi_d(w.cols);
    for (std::size_t i = 0; i < w.cols; ++i) pi_d[i] = to_double(pi.pi[i]);
    auto tv = [&](const std::vector<double>& q) {
        double sum = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) sum += std::fabs(q[i] - pi_d[i]);
        return 0.5 * sum;
    };
    std::vector<double> p = p0;
    if (tv(p) < threshold) return 0;
    std::vector<double> next(w.cols);
    for (int t = 1; t <= max_steps; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t c = 0; c < w.cols; ++c) {
            const double pc = p[c];
            if (pc == 0.0) continue;
            for (const auto& [row, v] : cols[c]) next[row] += v * pc;
        }
        p.swap(next);
        if (tv(p) < threshold) return t;
    }
    return max_steps + 1;
}

std::vector<std::size_t> sample_walk(const WalkOperator& w, std::size_t start, int steps,
                                     std::uint64_t seed) {
    if (w.rows != w.cols) throw std::invalid_argument("sample_walk: operator not square");
    if (start >= w.cols) throw std::invalid_argument("sample_walk: start out of range");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<std::size_t> path;
    path.reserve(steps + 1);
    path.push_back(start);
    std::size_t cur = start;
    for (int t = 0; t < steps; ++t) {
        double x = unif(rng);
        double acc = 0.0;
        std::size_t nxt = cur;
        for (const auto& [row, v] : w.col_entries[cur]) {
            acc += to_double(v);
            if (x <= acc) {
                nxt = row;
                break;
            }
        }
        cur = nxt;
        path.push_back(cur);
    }
    return path;
}

}  // namespace hdx
