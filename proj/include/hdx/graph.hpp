#pragma once

#include "hdx/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace hdx {

struct Edge {
    int u = 0, v = 0;  // endpoints, u < v
    Rational w = 1;    // positive weight
};

/// Undirected weighted graph without self-loops or parallel edges.
struct WeightedGraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge index)

    Rational weighted_degree(int u) const;
    int degree(int u) const { return static_cast<int>(adj[u].size()); }
    bool is_connected() const;
    bool unit_weights() const;
};

/// Validates endpoints, weights and duplicates, then builds the adjacency lists.
/// Connectivity is not enforced here; the file loader and generators handle that.
WeightedGraph make_graph(int n, std::vector<Edge> edges);

/// Edge-list text format: one `u v [w]` line per edge, `#` starts a comment,
/// weights are decimals or `p/q` rationals (default 1). Requires a connected graph.
WeightedGraph load_graph(const std::string& path);
WeightedGraph parse_edge_list(std::istream& in, const std::string& name);
void save_graph(const WeightedGraph& g, const std::string& path, const std::string& header = "");

WeightedGraph gen_cycle(int n);
WeightedGraph gen_complete(int n);
/// Pairing-model generation, rejecting loops/parallel edges and disconnected
/// outcomes; deterministic for a fixed seed. Throws after 1000 failed rounds.
WeightedGraph gen_random_regular(int n, int d, std::uint64_t seed);

struct GraphSpectrum {
    std::vector<double> eigenvalues;  // of the random-walk matrix, descending
    double gap = 0.0;                 // nu_2 = 1 - eigenvalues[1]
};

/// Spectrum of W = M D^{-1}, computed through the symmetric conjugate
/// D^{-1/2} M D^{-1/2}. Requires every vertex to have positive degree.
GraphSpectrum graph_spectrum(const WeightedGraph& g);

struct DegreeStats {
    Rational min_degree, max_degree;
    double ratio = 1.0;  // max/min
};
DegreeStats degree_stats(const WeightedGraph& g);

}  // namespace hdx
