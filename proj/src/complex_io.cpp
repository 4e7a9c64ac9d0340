#include "hdx/complex_io.hpp"

#include "hdx/class_weights.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace hdx {

using nlohmann::json;

json complex_to_json(const Complex& c) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = (c.kind == ComplexKind::Z) ? "Z" : "Q";
    doc["H"] = c.H;
    doc["s"] = c.s;
    doc["n"] = c.graph.n;
    json edges = json::array();
    for (const auto& e : c.graph.edges) edges.push_back({e.u, e.v, rational_str(e.w)});
    doc["graph_edges"] = std::move(edges);

    json levels = json::array();
    for (int d = -1; d <= c.H; ++d) {
        const Level& lv = c.level(d);
        json faces = json::array();
        json weights = json::array();
        for (std::size_t i = 0; i < lv.size(); ++i) {
            json face = json::array();
            for (const auto& z : lv.faces[i].verts) face.push_back({z.v, z.b});
            faces.push_back(std::move(face));
            weights.push_back(rational_str(lv.weights[i]));
        }
        levels.push_back({{"dim", d}, {"faces", std::move(faces)}, {"weights", std::move(weights)}});
    }
    doc["levels"] = std::move(levels);

    ClassWeightTable table = class_weights_from_complex(c);
    json classes = json::array();
    for (int cnt = 1; cnt <= c.H + 1; ++cnt) {
        // deterministic dump order
        std::vector<FaceClass> keys;
        for (const auto& [cls, w] : table.by_count[cnt]) keys.push_back(cls);
        std::sort(keys.begin(), keys.end());
        for (const auto& cls : keys) {
            classes.push_back({{"kind", cls.kind == ClassKind::Split ? "split" : "pure"},
                               {"u", cls.u},
                               {"v", cls.v},
                               {"j", cls.j},
                               {"k", cls.k},
                               {"w", rational_str(table.at(cls))}});
        }
    }
    doc["class_weights"] = std::move(classes);
    return doc;
}

Complex complex_from_json(const json& doc) {
    Complex c;
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "Z") c.kind = ComplexKind::Z;
    else if (kind == "Q") c.kind = ComplexKind::Q;
    else throw std::runtime_error("complex_from_json: unknown kind '" + kind + "'");
    c.H = doc.at("H").get<int>();
    c.s = doc.at("s").get<int>();
    const int n = doc.at("n").get<int>();

    std::vector<Edge> edges;
    for (const auto& e : doc.at("graph_edges")) {
        if (!e.is_array() || e.size() != 3) throw std::runtime_error("complex_from_json: bad edge entry");
        edges.push_back({e[0].get<int>(), e[1].get<int>(), parse_rational(e[2].get<std::string>())});
    }
    c.graph = make_graph(n, std::move(edges));
    if (!c.graph.is_connected()) throw std::runtime_error("complex_from_json: graph is not connected");

    c.levels.resize(c.H + 2);
    for (const auto& lv : doc.at("levels")) {
        const int d = lv.at("dim").get<int>();
        if (d < -1 || d > c.H) throw std::runtime_error("complex_from_json: level dimension out of range");
        Level& out = c.levels[d + 1];
        const auto& faces = lv.at("faces");
        const auto& weights = lv.at("weights");
        if (faces.size() != weights.size()) throw std::runtime_error("complex_from_json: faces/weights mismatch");
        for (std::size_t i = 0; i < faces.size(); ++i) {
            std::vector<ZVertex> verts;
            for (const auto& z : faces[i]) {
                if (!z.is_array() || z.size() != 2) throw std::runtime_error("complex_from_json: bad vertex");
                verts.push_back({z[0].get<std::int32_t>(), z[1].get<std::int32_t>()});
            }
            Face f = make_face(std::move(verts));
            if (f.dim() != d) throw std::runtime_error("complex_from_json: face dimension mismatch");
            out.faces.push_back(std::move(f));
            out.weights.push_back(parse_rational(weights[i].get<std::string>()));
        }
        out.finalize();
    }

    StructureReport structure = check_structure(c);
    if (!structure.ok)
        throw std::runtime_error("complex_from_json: malformed complex: " +
                                 (structure.violations.empty() ? std::string("unknown") : structure.violations[0]));
    BalanceReport balance = verify_balance(c);
    if (!balance.ok)
        throw std::runtime_error("complex_from_json: weights not balanced at face " +
                                 face_str(balance.first_violation->face));
    return c;
}

void save_complex(const Complex& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_complex: cannot open '" + path + "'");
    out << complex_to_json(c).dump(1) << "\n";
    if (!out) throw std::runtime_error("save_complex: write failed for '" + path + "'");
}

Complex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_complex: cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& ex) {
        throw std::runtime_error("load_complex: " + path + ": " + ex.what());
    }
    return complex_from_json(doc);
}

}  // namespace hdx
