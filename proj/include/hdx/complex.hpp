#pragma once

#include "hdx/graph.hpp"
#include "hdx/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hdx {

/// A vertex of the product complex: graph vertex v paired with a color b in [s].
struct ZVertex {
    std::int32_t v = 0;
    std::int32_t b = 0;
    auto operator<=>(const ZVertex&) const = default;
};

/// A face: canonically (v,b)-sorted sequence of distinct vertices.
struct Face {
    std::vector<ZVertex> verts;
    int dim() const { return static_cast<int>(verts.size()) - 1; }
    int count() const { return static_cast<int>(verts.size()); }
    auto operator<=>(const Face&) const = default;
};

Face make_face(std::vector<ZVertex> verts);
std::string face_str(const Face& f);

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& z : f.verts) {
            std::uint64_t x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(z.v)) << 32) |
                              static_cast<std::uint32_t>(z.b);
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

enum class ClassKind { Split, Pure };

/// Permutation orbit of a face: j vertices over u and k-j over v for an edge
/// {u,v} (canonically u < v), or all k vertices over the single vertex u.
struct FaceClass {
    ClassKind kind = ClassKind::Pure;
    int u = 0;
    int v = -1;  // -1 for Pure
    int j = 0;   // vertices over u; equals k for Pure
    int k = 0;   // total vertex count
    auto operator<=>(const FaceClass&) const = default;

    static FaceClass split(int a, int b, int over_a, int total);
    static FaceClass pure(int u, int total);
};

std::string class_str(const FaceClass& c);

struct FaceClassHash {
    std::size_t operator()(const FaceClass& c) const noexcept {
        std::size_t h = static_cast<std::size_t>(c.kind);
        for (int x : {c.u, c.v, c.j, c.k}) h = h * 1000003u + static_cast<std::size_t>(x + 1);
        return h;
    }
};

/// Orbit of a face from the face alone; faces over >2 graph vertices are invalid.
FaceClass face_class_of(const Face& f);

enum class ComplexKind { Z, Q };

/// One dimension of a complex: faces in canonical (sorted) order with weights.
struct Level {
    std::vector<Face> faces;
    std::vector<Rational> weights;
    std::unordered_map<Face, std::size_t, FaceHash> index;
    Rational total = 0;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t size() const { return faces.size(); }
    std::size_t find(const Face& f) const;
    void finalize();  // sorts faces, rebuilds index and total
};

/// Pure weighted simplicial complex over V(G) x [s] with a balanced weight map.
/// levels[d+1] holds the faces of dimension d, for d = -1..H.
struct Complex {
    ComplexKind kind = ComplexKind::Z;
    int H = 0;
    int s = 0;
    WeightedGraph graph;
    std::vector<Level> levels;

    const Level& level(int dim) const;
    Level& level(int dim);
    const Rational& weight(int dim, std::size_t i) const { return level(dim).weights[i]; }
    /// Faces of dimension 0..H (the empty face is excluded).
    std::size_t face_count() const;
};

struct BuildOptions {
    std::size_t max_top_faces = 10'000'000;
    bool allow_weighted_q = false;
};

/// Predicted top-level face count used by the size cap.
Int predicted_top_faces(const WeightedGraph& g, int H, int s, ComplexKind kind);

Complex build_Z(const WeightedGraph& g, int H, int s, const BuildOptions& opt = {});
Complex build_Q(const WeightedGraph& g, int H, int s, const BuildOptions& opt = {});

/// Orbit of a face that must belong to the complex.
FaceClass classify(const Complex& c, const Face& f);

/// Link of f, materialized as an independent complex of dimension
/// H - dim(f) - 1 with inherited weights. Requires dim(f) <= H-2.
Complex link(const Complex& c, const Face& f);

/// The weighted graph (X(0), X(1), m), with labels mapping graph vertex
/// indices back to complex vertices.
struct OneSkeleton {
    WeightedGraph graph;
    std::vector<ZVertex> labels;
    std::size_t index_of(const ZVertex& z) const;
};
OneSkeleton one_skeleton(const Complex& c);

struct BalanceViolation {
    int dim = 0;
    Face face;
    Rational stored, expected;
    std::string rule;  // "one-level" or "top-sum"
};

struct BalanceReport {
    bool ok = true;
    std::size_t checked = 0;
    std::optional<BalanceViolation> first_violation;
};

/// Exact check of the balance property, both as the one-level identity
/// m(sigma) = sum of superface weights and as the direct top-level formula
/// m(sigma) = (H-k)! * sum over containing top faces.
BalanceReport verify_balance(const Complex& c);

struct StructureReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exhaustive purity / downward-closure / well-formedness check (desk scale).
StructureReport check_structure(const Complex& c);

}  // namespace hdx
