#pragma once

#include "hdx/complex.hpp"
#include "hdx/graph.hpp"
#include "hdx/rational.hpp"

#include <unordered_map>
#include <vector>

namespace hdx {

/// One exact weight per permutation-orbit class, for vertex counts 1..H+1.
/// Kept per-edge even though the Z ratios are edge-independent; the
/// independence is asserted by tests rather than assumed by the layout.
struct ClassWeightTable {
    ComplexKind kind = ComplexKind::Z;
    int H = 0;
    int s = 0;
    WeightedGraph graph;
    // by_count[t] holds the classes with t total vertices, t in 1..H+1
    std::vector<std::unordered_map<FaceClass, Rational, FaceClassHash>> by_count;

    const Rational& at(const FaceClass& c) const;
    bool contains(const FaceClass& c) const;
};

/// Fills the table by downward recursion from the top level: a class with t
/// vertices weighs (s-t) times the sum of its one-vertex-extension classes.
ClassWeightTable class_weights(const WeightedGraph& g, int H, int s, ComplexKind kind = ComplexKind::Z,
                               bool allow_weighted_q = false);

/// Reads the table off an explicitly built complex, checking that the weight
/// is constant on every class. Serves as the independent oracle for the
/// recursion above.
ClassWeightTable class_weights_from_complex(const Complex& c);

/// Exact closed form for w^{(j,k-j)} / w_G on the Z construction:
/// (H+1-k)! * sum_l C(s-k,l) C(s-k-l,H+1-k-l) / C(H-1,j+l-1).
/// Valid for 2 <= k <= H+1, 1 <= j <= k-1.
Rational closed_form_ratio(int H, int s, int k, int j);

struct IdentityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exact class-weight identities: split ratio w^{(j+1,k-j)}/w^{(j,k-j+1)} =
/// j/(k-j), and pure-to-split ratio w^{(k+1)}_u / sum_v w^{(k,1)}_{(u,v)} =
/// k * (1/(k+1) + ... + 1/H).
IdentityReport check_ratio_identities(const ClassWeightTable& t);

enum class StepDirection { Up = +1, Down = -1 };

/// Probability that one up-down step moves a (j, k-j) face to (j+1, k-j-1+1)
/// resp. (j-1, k-j+1), evaluated from the class weights. The value is
/// edge-independent; evaluation on every edge is cross-checked.
Rational updown_class_step_prob(const ClassWeightTable& t, int k, int j, StepDirection dir);

}  // namespace hdx
