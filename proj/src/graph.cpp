#include "hdx/graph.hpp"

#include "hdx/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hdx {

Rational WeightedGraph::weighted_degree(int u) const {
    Rational d = 0;
    for (auto [v, e] : adj[u]) d += edges[e].w;
    return d;
}

bool WeightedGraph::is_connected() const {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [v, e] : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

bool WeightedGraph::unit_weights() const {
    for (const auto& e : edges)
        if (e.w != 1) return false;
    return true;
}

WeightedGraph make_graph(int n, std::vector<Edge> edges) {
    if (n <= 0) throw std::invalid_argument("make_graph: vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("make_graph: self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("make_graph: endpoint out of range");
        if (e.w <= 0) throw std::invalid_argument("make_graph: non-positive edge weight");
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("make_graph: duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    WeightedGraph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        g.adj[g.edges[e].u].push_back({g.edges[e].v, e});
        g.adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
    return g;
}

WeightedGraph parse_edge_list(std::istream& in, const std::string& name) {
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    int max_vertex = -1;
    auto fail = [&](const std::string& msg) {
        return std::runtime_error(name + ":" + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tu, tv, tw;
        if (!(ls >> tu)) continue;  // blank line
        if (!(ls >> tv)) throw fail("expected `u v [w]`");
        Edge e;
        try {
            e.u = std::stoi(tu);
            e.v = std::stoi(tv);
        } catch (const std::exception&) {
            throw fail("bad vertex id");
        }
        if (e.u < 0 || e.v < 0) throw fail("negative vertex id");
        if (e.u == e.v) throw fail("self-loop at vertex " + std::to_string(e.u));
        if (ls >> tw) {
            try {
                e.w = parse_rational(tw);
            } catch (const std::exception&) {
                throw fail("bad weight '" + tw + "'");
            }
            if (e.w <= 0) throw fail("non-positive weight");
        }
        std::string extra;
        if (ls >> extra) throw fail("trailing token '" + extra + "'");
        max_vertex = std::max({max_vertex, e.u, e.v});
        edges.push_back(std::move(e));
    }
    if (edges.empty()) throw std::runtime_error(name + ": no edges");
    WeightedGraph g;
    try {
        g = make_graph(max_vertex + 1, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(name + ": " + ex.what());
    }
    if (!g.is_connected()) throw std::runtime_error(name + ": graph is not connected");
    return g;
}

WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_graph: cannot open '" + path + "'");
    return parse_edge_list(in, path);
}

void save_graph(const WeightedGraph& g, const std::string& path, const std::string& header) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_graph: cannot open '" + path + "'");
    if (!header.empty()) out << header;
    for (const auto& e : g.edges) {
        out << e.u << " " << e.v;
        if (e.w != 1) out << " " << rational_str(e.w);
        out << "\n";
    }
    if (!out) throw std::runtime_error("save_graph: write failed for '" + path + "'");
}

WeightedGraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1});
    return make_graph(n, std::move(edges));
}

WeightedGraph gen_complete(int n) {
    if (n < 2) throw std::invalid_argument("gen_complete: need n >= 2");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
    return make_graph(n, std::move(edges));
}

WeightedGraph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 3 || d < 1 || d >= n || (static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("gen_random_regular: infeasible parameters n=" + std::to_string(n) +
                                    " d=" + std::to_string(d));
    std::mt19937_64 rng(seed);
    const int max_rounds = 1000;
    for (int round = 0; round < max_rounds; ++round) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> used;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            else if (!used.insert(std::minmax(u, v)).second) ok = false;
        }
        if (!ok) continue;
        std::vector<Edge> edges;
        for (auto [u, v] : used) edges.push_back({u, v, 1});
        WeightedGraph g = make_graph(n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("gen_random_regular: no simple connected pairing after 1000 rounds");
}

GraphSpectrum graph_spectrum(const WeightedGraph& g) {
    const int n = g.n;
    if (n < 2) throw std::invalid_argument("graph_spectrum: need at least 2 vertices");
    std::vector<double> deg(n);
    for (int u = 0; u < n; ++u) {
        Rational d = g.weighted_degree(u);
        if (d <= 0) throw std::invalid_argument("graph_spectrum: vertex " + std::to_string(u) + " has zero degree");
        deg[u] = to_double(d);
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges) {
        double val = to_double(e.w) / std::sqrt(deg[e.u] * deg[e.v]);
        a(e.u, e.v) = val;
        a(e.v, e.u) = val;
    }
    GraphSpectrum spec;
    spec.eigenvalues = symmetric_eigenvalues_desc(a);
    if (std::fabs(spec.eigenvalues.front() - 1.0) > 1e-8)
        throw std::runtime_error("graph_spectrum: leading eigenvalue deviates from 1 by " +
                                 std::to_string(std::fabs(spec.eigenvalues.front() - 1.0)));
    for (double w : spec.eigenvalues)
        if (std::fabs(w) > 1.0 + 1e-9)
            throw std::runtime_error("graph_spectrum: eigenvalue outside [-1,1]: " + std::to_string(w));
    spec.gap = 1.0 - spec.eigenvalues[1];
    return spec;
}

DegreeStats degree_stats(const WeightedGraph& g) {
    DegreeStats st;
    st.min_degree = st.max_degree = g.weighted_degree(0);
    for (int u = 1; u < g.n; ++u) {
        Rational d = g.weighted_degree(u);
        if (d < st.min_degree) st.min_degree = d;
        if (d > st.max_degree) st.max_degree = d;
    }
    st.ratio = to_double(Rational(st.max_degree / st.min_degree));
    return st;
}

}  // namespace hdx
