#include "hdx/complex_io.hpp"

#include "hdx/class_weights.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace hdx;

TEST_CASE("complex JSON round trip is bit-exact") {
    Complex z = build_Z(testutil::weighted_c4(), 2, 4);
    nlohmann::json doc = complex_to_json(z);
    Complex back = complex_from_json(doc);

    CHECK(back.kind == z.kind);
    CHECK(back.H == z.H);
    CHECK(back.s == z.s);
    CHECK(back.graph.n == z.graph.n);
    REQUIRE(back.graph.edges.size() == z.graph.edges.size());
    for (std::size_t i = 0; i < z.graph.edges.size(); ++i)
        CHECK(back.graph.edges[i].w == z.graph.edges[i].w);
    for (int d = -1; d <= z.H; ++d) {
        REQUIRE(back.level(d).size() == z.level(d).size());
        CHECK(back.level(d).faces == z.level(d).faces);
        CHECK(back.level(d).weights == z.level(d).weights);  // exact rational equality
        CHECK(back.level(d).total == z.level(d).total);
    }

    SUBCASE("file round trip, unknown keys ignored") {
        doc["config"] = {{"subcommand", "build"}};
        const std::string path = "complex_roundtrip_test.json";
        {
            std::ofstream out(path);
            out << doc.dump() << "\n";
        }
        Complex again = load_complex(path);
        CHECK(again.level(z.H).weights == z.level(z.H).weights);
        std::remove(path.c_str());
    }
}

TEST_CASE("tampered complex documents are rejected") {
    Complex z = build_Z(gen_cycle(4), 2, 4);
    SUBCASE("weight perturbation breaks balance") {
        nlohmann::json doc = complex_to_json(z);
        doc["levels"][1]["weights"][0] = "99/1";
        CHECK_THROWS_WITH_AS(complex_from_json(doc), doctest::Contains("balanced"), std::runtime_error);
    }
    SUBCASE("dropped face breaks closure") {
        nlohmann::json doc = complex_to_json(z);
        auto& faces = doc["levels"][1]["faces"];
        auto& weights = doc["levels"][1]["weights"];
        faces.erase(0);
        weights.erase(0);
        CHECK_THROWS_AS(complex_from_json(doc), std::runtime_error);
    }
    SUBCASE("unknown kind") {
        nlohmann::json doc = complex_to_json(z);
        doc["kind"] = "X";
        CHECK_THROWS_AS(complex_from_json(doc), std::runtime_error);
    }
}

TEST_CASE("Q complexes round trip too") {
    Complex q = build_Q(gen_cycle(4), 2, 4);
    Complex back = complex_from_json(complex_to_json(q));
    CHECK(back.kind == ComplexKind::Q);
    CHECK(back.level(2).size() == q.level(2).size());
    CHECK(back.level(2).weights == q.level(2).weights);
}

TEST_CASE("class weights embedded in the document match a recomputation") {
    WeightedGraph g = testutil::weighted_c4();
    Complex z = build_Z(g, 2, 4);
    nlohmann::json doc = complex_to_json(z);
    ClassWeightTable t = class_weights(g, 2, 4);
    for (const auto& entry : doc.at("class_weights")) {
        FaceClass cls;
        cls.kind = entry.at("kind").get<std::string>() == "split" ? ClassKind::Split : ClassKind::Pure;
        cls.u = entry.at("u").get<int>();
        cls.v = entry.at("v").get<int>();
        cls.j = entry.at("j").get<int>();
        cls.k = entry.at("k").get<int>();
        CHECK(t.at(cls) == parse_rational(entry.at("w").get<std::string>()));
    }
}
