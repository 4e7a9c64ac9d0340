#include "hdx/class_weights.hpp"

#include <stdexcept>

namespace hdx {

const Rational& ClassWeightTable::at(const FaceClass& c) const {
    if (c.k < 1 || c.k >= static_cast<int>(by_count.size()))
        throw std::out_of_range("ClassWeightTable::at: vertex count " + std::to_string(c.k) + " out of range");
    auto it = by_count[c.k].find(c);
    if (it == by_count[c.k].end())
        throw std::out_of_range("ClassWeightTable::at: class " + class_str(c) + " not in table");
    return it->second;
}

bool ClassWeightTable::contains(const FaceClass& c) const {
    return c.k >= 1 && c.k < static_cast<int>(by_count.size()) && by_count[c.k].count(c) > 0;
}

ClassWeightTable class_weights(const WeightedGraph& g, int H, int s, ComplexKind kind, bool allow_weighted_q) {
    if (H < 1) throw std::invalid_argument("class_weights: H must be >= 1");
    if (s < H + 1) throw std::invalid_argument("class_weights: need s >= H+1");
    if (kind == ComplexKind::Q && !g.unit_weights() && !allow_weighted_q)
        throw std::invalid_argument("class_weights: weighted Q table requires allow_weighted_q");

    ClassWeightTable t;
    t.kind = kind;
    t.H = H;
    t.s = s;
    t.graph = g;
    t.by_count.resize(H + 2);

    // Top level, t = H+1 vertices.
    for (const auto& e : g.edges)
        for (int j = 1; j <= H; ++j) {
            Rational w = (kind == ComplexKind::Z) ? Rational(e.w / Rational(binomial(H - 1, j - 1)))
                                                  : Rational(e.w);
            t.by_count[H + 1].emplace(FaceClass::split(e.u, e.v, j, H + 1), std::move(w));
        }
    for (int u = 0; u < g.n; ++u)
        t.by_count[H + 1].emplace(FaceClass::pure(u, H + 1), kind == ComplexKind::Z ? Rational(0) : Rational(1));

    // Downward: a class with c vertices weighs (s-c) times the sum of its
    // one-vertex extensions.
    for (int cnt = H; cnt >= 1; --cnt) {
        const Rational colors_left(s - cnt);
        for (const auto& e : g.edges)
            for (int j = 1; j <= cnt - 1; ++j) {
                Rational w = colors_left * (t.at(FaceClass::split(e.u, e.v, j + 1, cnt + 1)) +
                                            t.at(FaceClass::split(e.u, e.v, j, cnt + 1)));
                t.by_count[cnt].emplace(FaceClass::split(e.u, e.v, j, cnt), std::move(w));
            }
        for (int u = 0; u < g.n; ++u) {
            Rational sum = t.at(FaceClass::pure(u, cnt + 1));
            for (auto [v, e] : t.graph.adj[u]) sum += t.at(FaceClass::split(u, v, cnt, cnt + 1));
            t.by_count[cnt].emplace(FaceClass::pure(u, cnt), Rational(colors_left * sum));
        }
    }
    return t;
}

ClassWeightTable class_weights_from_complex(const Complex& c) {
    ClassWeightTable t;
    t.kind = c.kind;
    t.H = c.H;
    t.s = c.s;
    t.graph = c.graph;
    t.by_count.resize(c.H + 2);
    for (int d = 0; d <= c.H; ++d) {
        const Level& lv = c.level(d);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            FaceClass cls = face_class_of(lv.faces[i]);
            auto [it, inserted] = t.by_count[d + 1].emplace(cls, lv.weights[i]);
            if (!inserted && it->second != lv.weights[i])
                throw std::runtime_error("class_weights_from_complex: weight not constant on class " +
                                         class_str(cls));
        }
    }
    // Z assigns zero weight to the pure top classes; record that explicitly.
    if (c.kind == ComplexKind::Z)
        for (int u = 0; u < c.graph.n; ++u)
            t.by_count[c.H + 1].emplace(FaceClass::pure(u, c.H + 1), Rational(0));
    return t;
}

Rational closed_form_ratio(int H, int s, int k, int j) {
    if (k < 2 || k > H + 1 || j < 1 || j > k - 1)
        throw std::invalid_argument("closed_form_ratio: need 2 <= k <= H+1 and 1 <= j <= k-1");
    if (s < H + 1) throw std::invalid_argument("closed_form_ratio: need s >= H+1");
    Rational sum = 0;
    for (int l = 0; l <= H + 1 - k; ++l)
        sum += make_rational(binomial(s - k, l) * binomial(s - k - l, H + 1 - k - l), binomial(H - 1, j + l - 1));
    return Rational(Rational(factorial(H + 1 - k)) * sum);
}

IdentityReport check_ratio_identities(const ClassWeightTable& t) {
    IdentityReport rep;
    auto complain = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    for (int k = 1; k <= t.H; ++k) {
        // split ratio: w^{(j+1,k-j)} / w^{(j,k-j+1)} = j / (k-j)
        for (const auto& e : t.graph.edges)
            for (int j = 1; j <= k - 1; ++j) {
                const Rational& hi = t.at(FaceClass::split(e.u, e.v, j + 1, k + 1));
                const Rational& lo = t.at(FaceClass::split(e.u, e.v, j, k + 1));
                if (hi * (k - j) != lo * j)
                    complain("split ratio fails at edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} k=" + std::to_string(k) + " j=" + std::to_string(j));
            }
        // pure ratio: w^{(k+1)}_u / sum_v w^{(k,1)}_{(u,v)} = k * sum_{i=k+1}^H 1/i
        for (int u = 0; u < t.graph.n; ++u) {
            Rational denom = 0;
            for (auto [v, e] : t.graph.adj[u]) denom += t.at(FaceClass::split(u, v, k, k + 1));
            Rational expected = Rational(k) * harmonic(k + 1, t.H);
            if (t.at(FaceClass::pure(u, k + 1)) != expected * denom)
                complain("pure ratio fails at vertex " + std::to_string(u) + " k=" + std::to_string(k));
        }
    }
    return rep;
}

Rational updown_class_step_prob(const ClassWeightTable& t, int k, int j, StepDirection dir) {
    if (k < 2 || k > t.H || j < 1 || j > k - 1)
        throw std::invalid_argument("updown_class_step_prob: need 2 <= k <= H and 1 <= j <= k-1");
    bool have = false;
    Rational value;
    for (const auto& e : t.graph.edges) {
        const Rational& up_w = t.at(FaceClass::split(e.u, e.v, j + 1, k + 1));
        const Rational& down_w = t.at(FaceClass::split(e.u, e.v, j, k + 1));
        Rational total = up_w + down_w;
        Rational p = (dir == StepDirection::Up) ? Rational(up_w / total * make_rational(k - j, k + 1))
                                                : Rational(down_w / total * make_rational(j, k + 1));
        if (!have) {
            value = p;
            have = true;
        } else if (p != value) {
            throw std::logic_error("updown_class_step_prob: value differs across edges");
        }
    }
    if (!have) throw std::invalid_argument("updown_class_step_prob: graph has no edges");
    return value;
}

}  // namespace hdx
