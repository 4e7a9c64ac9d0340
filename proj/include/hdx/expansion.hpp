#pragma once

#include "hdx/complex.hpp"
#include "hdx/graph.hpp"
#include "hdx/walks.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hdx {

struct LinkGap {
    Face face;
    FaceClass cls;
    double gap = 0.0;
};

/// Spectral gap of every link 1-skeleton at one level, exhaustively.
struct LevelSweep {
    int k = 0;
    double nu = 0.0;        // minimum gap
    std::size_t argmin = 0; // index into gaps (canonical face order)
    std::vector<LinkGap> gaps;
    double split_min, pure_min;  // per-class minima, NaN when the class is absent
};
LevelSweep local_sweep(const Complex& c, int k);

/// Link 1-skeleton built directly from levels k+1 and k+2; equals
/// one_skeleton(link(c, f)) and is used by the sweep as the fast path.
OneSkeleton link_skeleton(const Complex& c, const Face& f);

struct GlobalExpansion {
    double nu = 0.0;       // 1 - omega2 of the full 1-skeleton, direct eigensolve
    double omega2 = 0.0;
    // Lazy-eigenvalue closed form max{~omega_2, -~omega_n/(s-1)}; Z only.
    std::optional<double> omega2_predicted;
    bool second_branch = false;  // prediction attained by -~omega_n/(s-1)
};
GlobalExpansion global_expansion(const Complex& c);

struct Check {
    std::string id;
    std::string formula;   // formula instance the check verifies
    std::string relation;  // "eq", "le", "ge", "gt", "exact"
    double expected = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string note;
};

struct VerificationReport {
    bool all_pass = true;  // over non-skipped checks
    std::vector<Check> checks;
};

struct VerifyOptions {
    bool explore = false;  // report out-of-hypothesis values instead of refusing
    double tol = 1e-9;
    BuildOptions build;
    SpectrumOptions spectrum;
};

/// End-to-end harness: builds Z (and the Q baseline) from g and verifies the
/// local/global gap equalities, the up-down walk gap sandwich, the
/// local-to-global product bound, the descent inequality, the exact weight
/// identities and class counts, and the Z-vs-Q comparison.
VerificationReport verify_theorems(const WeightedGraph& g, int H, int s, const VerifyOptions& opt = {});

nlohmann::json report_to_json(const VerificationReport& rep);

}  // namespace hdx
