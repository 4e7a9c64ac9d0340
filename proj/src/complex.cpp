#include "hdx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hdx {

Face make_face(std::vector<ZVertex> verts) {
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw std::invalid_argument("make_face: repeated vertex");
    return Face{std::move(verts)};
}

std::string face_str(const Face& f) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < f.verts.size(); ++i) {
        if (i) os << ",";
        os << "(" << f.verts[i].v << "," << f.verts[i].b << ")";
    }
    os << "}";
    return os.str();
}

FaceClass FaceClass::split(int a, int b, int over_a, int total) {
    if (a == b) throw std::invalid_argument("FaceClass::split: endpoints coincide");
    FaceClass c;
    c.kind = ClassKind::Split;
    if (a < b) {
        c.u = a;
        c.v = b;
        c.j = over_a;
    } else {
        c.u = b;
        c.v = a;
        c.j = total - over_a;
    }
    c.k = total;
    return c;
}

FaceClass FaceClass::pure(int u, int total) {
    FaceClass c;
    c.kind = ClassKind::Pure;
    c.u = u;
    c.v = -1;
    c.j = total;
    c.k = total;
    return c;
}

std::string class_str(const FaceClass& c) {
    std::ostringstream os;
    if (c.kind == ClassKind::Pure)
        os << "(" << c.k << ")_" << c.u;
    else
        os << "(" << c.j << "," << c.k - c.j << ")_{" << c.u << "," << c.v << "}";
    return os.str();
}

FaceClass face_class_of(const Face& f) {
    if (f.verts.empty()) throw std::invalid_argument("face_class_of: empty face has no class");
    int a = f.verts.front().v;
    int b = -1;
    int count_a = 0;
    for (const auto& z : f.verts) {
        if (z.v == a) {
            ++count_a;
        } else {
            if (b == -1) b = z.v;
            else if (z.v != b)
                throw std::invalid_argument("face_class_of: face spans more than two graph vertices");
        }
    }
    if (b == -1) return FaceClass::pure(a, f.count());
    return FaceClass::split(a, b, count_a, f.count());
}

std::size_t Level::find(const Face& f) const {
    auto it = index.find(f);
    return it == index.end() ? npos : it->second;
}

void Level::finalize() {
    std::vector<std::size_t> order(faces.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return faces[a] < faces[b]; });
    std::vector<Face> sorted_faces(faces.size());
    std::vector<Rational> sorted_weights(faces.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted_faces[i] = std::move(faces[order[i]]);
        sorted_weights[i] = std::move(weights[order[i]]);
    }
    faces = std::move(sorted_faces);
    weights = std::move(sorted_weights);
    index.clear();
    index.reserve(faces.size());
    total = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        index.emplace(faces[i], i);
        total += weights[i];
    }
}

const Level& Complex::level(int dim) const {
    if (dim < -1 || dim + 1 >= static_cast<int>(levels.size()))
        throw std::out_of_range("Complex::level: dimension " + std::to_string(dim) + " out of range");
    return levels[dim + 1];
}

Level& Complex::level(int dim) {
    return const_cast<Level&>(static_cast<const Complex&>(*this).level(dim));
}

std::size_t Complex::face_count() const {
    std::size_t total = 0;
    for (int d = 0; d <= H; ++d) total += level(d).size();
    return total;
}

Int predicted_top_faces(const WeightedGraph& g, int H, int s, ComplexKind kind) {
    Int split = Int(static_cast<long>(g.edges.size())) * binomial(s, H + 1) * ((Int(1) << (H + 1)) - 2);
    if (kind == ComplexKind::Q) split += Int(g.n) * binomial(s, H + 1);
    return split;
}

namespace {

// Enumerates (H+1)-subsets of [s] and for each one every assignment of its
// colors to the two endpoints of an edge.
template <typename Fn>
void for_each_color_subset(int s, int size, Fn&& fn) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 1);  // colors are 1-based
    while (true) {
        fn(pick);
        int i = size - 1;
        while (i >= 0 && pick[i] == s - (size - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int t = i + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
}

void propagate_down(Complex& c) {
    for (int d = c.H - 1; d >= -1; --d) {
        Level& lower = c.levels[d + 1];
        const Level& upper = c.levels[d + 2];
        std::unordered_map<Face, Rational, FaceHash> acc;
        for (std::size_t i = 0; i < upper.size(); ++i) {
            const Face& tau = upper.faces[i];
            Face facet;
            facet.verts.resize(tau.verts.size() - 1);
            for (std::size_t drop = 0; drop < tau.verts.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t r = 0; r < tau.verts.size(); ++r)
                    if (r != drop) facet.verts[w++] = tau.verts[r];
                acc[facet] += upper.weights[i];
            }
        }
        lower.faces.reserve(acc.size());
        lower.weights.reserve(acc.size());
        for (auto& [face, w] : acc) {
            lower.faces.push_back(face);
            lower.weights.push_back(w);
        }
        lower.finalize();
    }
}

void check_build_params(const WeightedGraph& g, int H, int s, ComplexKind kind, const BuildOptions& opt) {
    if (H < 1) throw std::invalid_argument("build: H must be >= 1");
    if (s < H + 1) throw std::invalid_argument("build: need s >= H+1");
    if (g.edges.empty()) throw std::invalid_argument("build: graph has no edges");
    Int predicted = predicted_top_faces(g, H, s, kind);
    if (predicted > Int(static_cast<unsigned long>(opt.max_top_faces)))
        throw std::invalid_argument("build: predicted top-level face count " + predicted.get_str() +
                                    " exceeds cap " + std::to_string(opt.max_top_faces));
}

Complex build_product(const WeightedGraph& g, int H, int s, ComplexKind kind, const BuildOptions& opt) {
    check_build_params(g, H, s, kind, opt);
    Complex c;
    c.kind = kind;
    c.H = H;
    c.s = s;
    c.graph = g;
    c.levels.resize(H + 2);
    Level& top = c.levels[H + 1];

    for_each_color_subset(s, H + 1, [&](const std::vector<int>& colors) {
        for (const auto& e : g.edges) {
            // Every proper nonempty subset of the colors goes over u, the rest over v.
            for (unsigned mask = 1; mask + 1 < (1u << (H + 1)); ++mask) {
                Face f;
                f.verts.reserve(H + 1);
                int j = 0;
                for (int i = 0; i <= H; ++i) {
                    bool over_u = (mask >> i) & 1u;
                    f.verts.push_back({over_u ? e.u : e.v, colors[i]});
                    if (over_u) ++j;
                }
                std::sort(f.verts.begin(), f.verts.end());
                Rational m = (kind == ComplexKind::Z) ? Rational(e.w / Rational(binomial(H - 1, j - 1)))
                                                      : Rational(e.w);
                top.faces.push_back(std::move(f));
                top.weights.push_back(std::move(m));
            }
        }
        if (kind == ComplexKind::Q) {
            for (int u = 0; u < g.n; ++u) {
                Face f;
                f.verts.reserve(H + 1);
                for (int i = 0; i <= H; ++i) f.verts.push_back({u, colors[i]});
                top.faces.push_back(std::move(f));
                top.weights.push_back(1);
            }
        }
    });
    top.finalize();
    propagate_down(c);
    return c;
}

}  // namespace

Complex build_Z(const WeightedGraph& g, int H, int s, const BuildOptions& opt) {
    return build_product(g, H, s, ComplexKind::Z, opt);
}

Complex build_Q(const WeightedGraph& g, int H, int s, const BuildOptions& opt) {
    if (!g.unit_weights() && !opt.allow_weighted_q)
        throw std::invalid_argument("build_Q: weighted input requires allow_weighted_q");
    return build_product(g, H, s, ComplexKind::Q, opt);
}

FaceClass classify(const Complex& c, const Face& f) {
    if (f.dim() < 0 || f.dim() > c.H) throw std::invalid_argument("classify: dimension out of range");
    if (c.level(f.dim()).find(f) == Level::npos)
        throw std::invalid_argument("classify: face " + face_str(f) + " not in complex");
    return face_class_of(f);
}

namespace {

bool is_subface(const Face& small, const Face& big) {
    std::size_t i = 0;
    for (const auto& z : big.verts) {
        if (i == small.verts.size()) return true;
        if (small.verts[i] == z) ++i;
    }
    return i == small.verts.size();
}

}  // namespace

Complex link(const Complex& c, const Face& f) {
    const int d0 = f.dim();
    if (d0 > c.H - 2) throw std::invalid_argument("link: need dim(face) <= H-2");
    if (d0 >= 0 && c.level(d0).find(f) == Level::npos)
        throw std::invalid_argument("link: face " + face_str(f) + " not in complex");
    Complex lk;
    lk.kind = c.kind;
    lk.H = c.H - d0 - 1;
    lk.s = c.s;
    lk.graph = c.graph;
    lk.levels.resize(lk.H + 2);
    for (int dl = -1; dl <= lk.H; ++dl) {
        Level& out = lk.levels[dl + 1];
        const Level& src = c.level(dl + d0 + 1);
        for (std::size_t i = 0; i < src.size(); ++i) {
            const Face& tau = src.faces[i];
            if (!is_subface(f, tau)) continue;
            Face rest;
            rest.verts.reserve(tau.verts.size() - f.verts.size());
            std::size_t p = 0;
            for (const auto& z : tau.verts) {
                if (p < f.verts.size() && f.verts[p] == z) ++p;
                else rest.verts.push_back(z);
            }
            out.faces.push_back(std::move(rest));
            out.weights.push_back(src.weights[i]);
        }
        out.finalize();
    }
    return lk;
}

std::size_t OneSkeleton::index_of(const ZVertex& z) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), z);
    if (it == labels.end() || *it != z) throw std::invalid_argument("OneSkeleton: unknown vertex");
    return static_cast<std::size_t>(it - labels.begin());
}

OneSkeleton one_skeleton(const Complex& c) {
    if (c.H < 1) throw std::invalid_argument("one_skeleton: complex must have levels 0 and 1");
    OneSkeleton sk;
    const Level& verts = c.level(0);
    sk.labels.reserve(verts.size());
    for (const auto& f : verts.faces) sk.labels.push_back(f.verts[0]);  // canonical order
    const Level& ones = c.level(1);
    std::vector<Edge> edges;
    edges.reserve(ones.size());
    for (std::size_t i = 0; i < ones.size(); ++i) {
        const Face& f = ones.faces[i];
        edges.push_back({static_cast<int>(sk.index_of(f.verts[0])), static_cast<int>(sk.index_of(f.verts[1])),
                         ones.weights[i]});
    }
    sk.graph = make_graph(static_cast<int>(sk.labels.size()), std::move(edges));
    return sk;
}

BalanceReport verify_balance(const Complex& c) {
    BalanceReport rep;
    auto record = [&](int dim, const Face& f, const Rational& stored, const Rational& expected,
                      const char* rule) {
        if (rep.ok) {
            rep.ok = false;
            rep.first_violation = BalanceViolation{dim, f, stored, expected, rule};
        }
    };

    // (a) one-level balance m(sigma) = sum of immediate superface weights
    for (int d = c.H - 1; d >= -1; --d) {
        const Level& lower = c.level(d);
        const Level& upper = c.level(d + 1);
        std::vector<Rational> acc(lower.size(), Rational(0));
        Face facet;
        for (std::size_t i = 0; i < upper.size(); ++i) {
            const Face& tau = upper.faces[i];
            facet.verts.resize(tau.verts.size() - 1);
            for (std::size_t drop = 0; drop < tau.verts.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t r = 0; r < tau.verts.size(); ++r)
                    if (r != drop) facet.verts[w++] = tau.verts[r];
                std::size_t at = lower.find(facet);
                if (at == Level::npos) {
                    record(d, facet, 0, upper.weights[i], "one-level");
                    continue;
                }
                acc[at] += upper.weights[i];
            }
        }
        for (std::size_t i = 0; i < lower.size(); ++i) {
            ++rep.checked;
            if (acc[i] != lower.weights[i]) record(d, lower.faces[i], lower.weights[i], acc[i], "one-level");
        }
    }

    // (b) direct formula m(sigma) = (H-k)! * sum over containing top faces
    const Level& top = c.level(c.H);
    std::vector<std::unordered_map<Face, Rational, FaceHash>> sums(c.H + 2);
    for (std::size_t t = 0; t < top.size(); ++t) {
        const Face& tau = top.faces[t];
        const unsigned full = 1u << tau.verts.size();
        for (unsigned mask = 0; mask < full; ++mask) {
            Face sub;
            for (std::size_t i = 0; i < tau.verts.size(); ++i)
                if ((mask >> i) & 1u) sub.verts.push_back(tau.verts[i]);
            sums[sub.verts.size()][std::move(sub)] += top.weights[t];
        }
    }
    for (int d = -1; d <= c.H; ++d) {
        const Level& lv = c.level(d);
        const Int fac = factorial(c.H - d);
        auto& table = sums[d + 1];
        if (table.size() != lv.size() && rep.ok)
            record(d, Face{}, Rational(static_cast<long>(lv.size())),
                   Rational(static_cast<long>(table.size())), "top-sum");
        for (std::size_t i = 0; i < lv.size(); ++i) {
            ++rep.checked;
            auto it = table.find(lv.faces[i]);
            Rational expected = (it == table.end()) ? Rational(0) : Rational(it->second * Rational(fac));
            if (expected != lv.weights[i]) record(d, lv.faces[i], lv.weights[i], expected, "top-sum");
        }
    }
    return rep;
}

StructureReport check_structure(const Complex& c) {
    StructureReport rep;
    auto complain = [&](std::string msg) {
        rep.ok = false;
        if (rep.violations.size() < 32) rep.violations.push_back(std::move(msg));
    };

    if (static_cast<int>(c.levels.size()) != c.H + 2) {
        complain("level array does not span -1..H");
        return rep;
    }
    if (c.level(-1).size() != 1 || !c.level(-1).faces[0].verts.empty())
        complain("level -1 must hold exactly the empty face");

    for (int d = 0; d <= c.H; ++d) {
        const Level& lv = c.level(d);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            const Face& f = lv.faces[i];
            if (f.dim() != d) complain("face " + face_str(f) + " stored at wrong level");
            if (!std::is_sorted(f.verts.begin(), f.verts.end()) ||
                std::adjacent_find(f.verts.begin(), f.verts.end()) != f.verts.end())
                complain("face " + face_str(f) + " is not canonical");
            if (i + 1 < lv.size() && !(f < lv.faces[i + 1])) complain("level " + std::to_string(d) + " unsorted");
            if (lv.weights[i] <= 0) complain("face " + face_str(f) + " has non-positive weight");
            // colors distinct within the face
            std::vector<int> colors;
            for (const auto& z : f.verts) colors.push_back(z.b);
            std::sort(colors.begin(), colors.end());
            if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
                complain("face " + face_str(f) + " repeats a color");
            for (const auto& z : f.verts)
                if (z.v < 0 || z.v >= c.graph.n || z.b < 1 || z.b > c.s)
                    complain("face " + face_str(f) + " has an out-of-range vertex");
            // vertex support inside a single edge or a single graph vertex
            try {
                FaceClass cls = face_class_of(f);
                if (cls.kind == ClassKind::Split) {
                    bool found = false;
                    for (auto [nb, e] : c.graph.adj[cls.u])
                        if (nb == cls.v) found = true;
                    if (!found) complain("face " + face_str(f) + " spans a non-edge");
                }
            } catch (const std::exception& ex) {
                complain(ex.what());
            }
        }
    }

    // downward closure: every facet of a face is a face
    for (int d = 0; d <= c.H; ++d) {
        const Level& lv = c.level(d);
        const Level& below = c.level(d - 1);
        Face facet;
        for (const Face& f : lv.faces) {
            facet.verts.resize(f.verts.size() - 1);
            for (std::size_t drop = 0; drop < f.verts.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t r = 0; r < f.verts.size(); ++r)
                    if (r != drop) facet.verts[w++] = f.verts[r];
                if (below.find(facet) == Level::npos)
                    complain("missing facet " + face_str(facet) + " of " + face_str(f));
            }
        }
    }

    // purity: every face extends to a top face
    for (int d = c.H - 1; d >= 0; --d) {
        const Level& lv = c.level(d);
        const Level& above = c.level(d + 1);
        std::vector<char> extendable(lv.size(), 0);
        Face facet;
        for (const Face& f : above.faces) {
            facet.verts.resize(f.verts.size() - 1);
            for (std::size_t drop = 0; drop < f.verts.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t r = 0; r < f.verts.size(); ++r)
                    if (r != drop) facet.verts[w++] = f.verts[r];
                std::size_t at = lv.find(facet);
                if (at != Level::npos) extendable[at] = 1;
            }
        }
        for (std::size_t i = 0; i < lv.size(); ++i)
            if (!extendable[i]) complain("face " + face_str(lv.faces[i]) + " has no superface");
    }
    return rep;
}

}  // namespace hdx
