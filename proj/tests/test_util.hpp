#pragma once

#include "hdx/complex.hpp"
#include "hdx/graph.hpp"
#include "hdx/rational.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

namespace hdx::testutil {

// Brute-force top-level enumeration, independent of the builders: walks every
// (H+1)-subset of V(G) x [s] and keeps those matching the defining predicate.
inline std::map<Face, Rational> naive_top_faces(const WeightedGraph& g, int H, int s, ComplexKind kind) {
    std::vector<ZVertex> pool;
    for (int v = 0; v < g.n; ++v)
        for (int b = 1; b <= s; ++b) pool.push_back({v, b});

    std::map<std::pair<int, int>, Rational> edge_weight;
    for (const auto& e : g.edges) edge_weight[{e.u, e.v}] = e.w;

    std::map<Face, Rational> out;
    const int want = H + 1;
    std::vector<int> idx(want);
    // lexicographic combinations over the pool
    for (int i = 0; i < want; ++i) idx[i] = i;
    const int n = static_cast<int>(pool.size());
    if (n < want) return out;
    while (true) {
        Face f;
        for (int i : idx) f.verts.push_back(pool[i]);
        // distinct colors?
        std::vector<int> colors;
        for (const auto& z : f.verts) colors.push_back(z.b);
        std::sort(colors.begin(), colors.end());
        bool colors_ok = std::adjacent_find(colors.begin(), colors.end()) == colors.end();
        if (colors_ok) {
            std::vector<int> support;
            for (const auto& z : f.verts) support.push_back(z.v);
            std::sort(support.begin(), support.end());
            support.erase(std::unique(support.begin(), support.end()), support.end());
            if (kind == ComplexKind::Z && support.size() == 2) {
                auto it = edge_weight.find({support[0], support[1]});
                if (it != edge_weight.end()) {
                    int j = 0;
                    for (const auto& z : f.verts)
                        if (z.v == support[0]) ++j;
                    out[f] = Rational(it->second / Rational(binomial(H - 1, j - 1)));
                }
            } else if (kind == ComplexKind::Q) {
                bool in_edge = false;
                if (support.size() == 1) in_edge = !g.adj[support[0]].empty();
                else if (support.size() == 2) in_edge = edge_weight.count({support[0], support[1]}) > 0;
                if (in_edge) out[f] = 1;
            }
        }
        int i = want - 1;
        while (i >= 0 && idx[i] == n - (want - i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < want; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

inline std::vector<int> random_color_permutation(int s, std::mt19937_64& rng) {
    std::vector<int> perm(s + 1);  // perm[b] for b in 1..s
    for (int b = 1; b <= s; ++b) perm[b] = b;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    return perm;
}

inline Face permute_colors(const Face& f, const std::vector<int>& perm) {
    std::vector<ZVertex> verts;
    verts.reserve(f.verts.size());
    for (const auto& z : f.verts) verts.push_back({z.v, perm[z.b]});
    return make_face(std::move(verts));
}

// C4 with four distinct rational weights.
inline WeightedGraph weighted_c4() {
    return make_graph(4, {{0, 1, parse_rational("1/2")},
                          {1, 2, parse_rational("2/3")},
                          {2, 3, parse_rational("3/5")},
                          {0, 3, parse_rational("7/4")}});
}

inline WeightedGraph scaled(const WeightedGraph& g, const Rational& factor) {
    std::vector<Edge> edges = g.edges;
    for (auto& e : edges) e.w *= factor;
    return make_graph(g.n, std::move(edges));
}

}  // namespace hdx::testutil
