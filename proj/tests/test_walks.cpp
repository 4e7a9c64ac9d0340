#include "hdx/walks.hpp"

#include "hdx/spectra.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace hdx;

TEST_CASE("up-step") {
    Complex z = build_Z(gen_cycle(4), 2, 4);
    SUBCASE("columns sum to 1 exactly at every level") {
        for (int k = -1; k <= z.H - 1; ++k) CHECK(columns_stochastic(up_step(z, k)));
    }
    SUBCASE("k = -1 is a single column of m(x)/m(empty)") {
        WalkOperator w = up_step(z, -1);
        REQUIRE(w.cols == 1);
        REQUIRE(w.rows == z.level(0).size());
        const Rational m_empty = z.level(-1).weights[0];
        REQUIRE(w.col_entries[0].size() == w.rows);
        for (const auto& [row, v] : w.col_entries[0])
            CHECK(v == Rational(z.level(0).weights[row] / m_empty));
    }
    SUBCASE("entries vanish off the coface pattern") {
        WalkOperator w = up_step(z, 0);
        // face 0 at level 0 paired with a level-1 face not containing it
        const Face& x = z.level(0).faces[0];
        const Level& l1 = z.level(1);
        for (std::size_t r = 0; r < l1.size(); ++r) {
            bool contains = std::binary_search(l1.faces[r].verts.begin(), l1.faces[r].verts.end(),
                                               x.verts[0]);
            if (!contains) CHECK(w.entry(r, 0) == 0);
        }
    }
    SUBCASE("level gate") {
        CHECK_THROWS_AS(up_step(z, z.H), std::invalid_argument);
        CHECK_THROWS_AS(up_step(z, -2), std::invalid_argument);
    }
}

TEST_CASE("down-step") {
    Complex z = build_Z(gen_cycle(4), 2, 4);
    SUBCASE("k=1: two entries of 1/2 per column") {
        WalkOperator w = down_step(z, 1);
        for (const auto& col : w.col_entries) {
            REQUIRE(col.size() == 2);
            for (const auto& [row, v] : col) CHECK(v == make_rational(1, 2));
        }
    }
    SUBCASE("k=0: single entry 1 down to the empty face") {
        WalkOperator w = down_step(z, 0);
        REQUIRE(w.rows == 1);
        for (const auto& col : w.col_entries) {
            REQUIRE(col.size() == 1);
            CHECK(col[0].second == 1);
        }
    }
    SUBCASE("columns sum to 1") {
        for (int k = 0; k <= z.H; ++k) CHECK(columns_stochastic(down_step(z, k)));
    }
}

TEST_CASE("up-down and down-up composites") {
    Complex z = build_Z(testutil::weighted_c4(), 3, 6);
    SUBCASE("diagonal holds the 1/(k+2) lazy mass exactly") {
        for (int k = 0; k <= z.H - 1; ++k) {
            WalkOperator w = updown(z, k);
            CHECK(columns_stochastic(w));
            for (std::size_t i = 0; i < w.cols; ++i) CHECK(w.entry(i, i) == make_rational(1, k + 2));
        }
    }
    SUBCASE("detailed balance w.r.t. the stationary measure, exactly") {
        for (int k = 0; k <= z.H - 1; ++k)
            CHECK(detailed_balance(updown(z, k), stationary_measure(z, k)));
        for (int k = 1; k <= z.H; ++k)
            CHECK(detailed_balance(downup(z, k), stationary_measure(z, k)));
    }
    SUBCASE("nonzero spectra of UD_k and DU_{k+1} coincide") {
        for (int k = 0; k <= z.H - 1; ++k) {
            auto ud = operator_spectrum(updown(z, k), stationary_measure(z, k));
            auto du = operator_spectrum(downup(z, k + 1), stationary_measure(z, k + 1));
            CHECK(nonzero_spectra_match(ud.eigenvalues, du.eigenvalues, 1e-8));
        }
    }
    SUBCASE("updown eigenvalues respect the -k/(k+2) floor") {
        for (int k = 0; k <= z.H - 1; ++k) {
            auto spec = operator_spectrum(updown(z, k), stationary_measure(z, k));
            CHECK(spec.eigenvalues.back() >= -static_cast<double>(k) / (k + 2) - 1e-9);
        }
    }
    SUBCASE("level gates") {
        CHECK_THROWS_AS(updown(z, z.H), std::invalid_argument);
        CHECK_THROWS_AS(downup(z, 0), std::invalid_argument);
    }
}

TEST_CASE("stationary measure sums to 1 and is positive") {
    Complex z = build_Z(gen_cycle(4), 2, 4);
    for (int k = 0; k <= z.H; ++k) {
        StationaryMeasure pi = stationary_measure(z, k);
        Rational total = 0;
        for (const auto& p : pi.pi) {
            CHECK(p > 0);
            total += p;
        }
        CHECK(total == 1);
    }
}

TEST_CASE("operator spectrum") {
    Complex z = build_Z(gen_cycle(4), 2, 4);
    SUBCASE("leading eigenvalue 1, small symmetrization residual") {
        auto spec = operator_spectrum(updown(z, 0), stationary_measure(z, 0));
        CHECK(spec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(spec.sym_residual < 1e-10);
    }
    SUBCASE("symmetrized path agrees with a general eigensolve of the raw operator") {
        WalkOperator w = updown(z, 1);
        auto spec = operator_spectrum(w, stationary_measure(z, 1));
        auto general = general_eigenvalues_desc(to_dense(w));
        REQUIRE(general.size() == spec.eigenvalues.size());
        CHECK(std::fabs(general[1] - spec.eigenvalues[1]) <= 1e-8);
    }
    SUBCASE("dimension cap") {
        SpectrumOptions opt;
        opt.max_dim = 3;
        CHECK_THROWS_AS(operator_spectrum(updown(z, 0), stationary_measure(z, 0), opt),
                        std::invalid_argument);
    }
    SUBCASE("reversibility gate catches a wrong measure") {
        StationaryMeasure wrong = stationary_measure(z, 0);
        wrong.pi[0] *= 2;
        CHECK_THROWS_AS(operator_spectrum(updown(z, 0), wrong), std::runtime_error);
    }
}

TEST_CASE("global weight rescaling leaves every operator entry unchanged") {
    WeightedGraph g = testutil::weighted_c4();
    WeightedGraph h = testutil::scaled(g, make_rational(3, 7));
    Complex a = build_Z(g, 2, 4);
    Complex b = build_Z(h, 2, 4);
    for (int k = 0; k <= 1; ++k) {
        WalkOperator wa = updown(a, k);
        WalkOperator wb = updown(b, k);
        REQUIRE(wa.cols == wb.cols);
        for (std::size_t c = 0; c < wa.cols; ++c) CHECK(wa.col_entries[c] == wb.col_entries[c]);
    }
    WalkOperator ua = up_step(a, 1), ub = up_step(b, 1);
    for (std::size_t c = 0; c < ua.cols; ++c) CHECK(ua.col_entries[c] == ub.col_entries[c]);
}

TEST_CASE("exact distribution evolution") {
    Complex z = build_Z(gen_cycle(4), 2, 4);
    const int k = 1;
    WalkOperator w = updown(z, k);
    StationaryMeasure pi = stationary_measure(z, k);

    SUBCASE("stationary start keeps TV at zero") {
        std::vector<double> p(pi.pi.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = to_double(pi.pi[i]);
        auto trace = evolve(w, pi, p, 20);
        for (double tv : trace) CHECK(tv <= 1e-12);
    }
    SUBCASE("TV from a point mass is monotone and under the spectral envelope") {
        auto spec = operator_spectrum(w, pi);
        const double omega_star =
            std::max(std::fabs(spec.eigenvalues[1]), std::fabs(spec.eigenvalues.back()));
        const std::size_t start = 0;
        auto trace = evolve(w, pi, point_mass(pi.pi.size(), start), 200);
        for (std::size_t t = 1; t < trace.size(); ++t) CHECK(trace[t] <= trace[t - 1] + 1e-12);
        const double pi0 = to_double(pi.pi[start]);
        for (std::size_t t = 0; t < trace.size(); ++t) {
            double envelope = 0.5 * std::sqrt((1.0 - pi0) / pi0) * std::pow(omega_star, t + 1);
            CHECK(trace[t] <= envelope + 1e-9);
        }
    }
    SUBCASE("steps_to_tv agrees with the trace") {
        auto trace = evolve(w, pi, point_mass(pi.pi.size(), 0), 400);
        int s = steps_to_tv(w, pi, point_mass(pi.pi.size(), 0), 0.01, 400);
        REQUIRE(s >= 1);
        REQUIRE(s <= 400);
        CHECK(trace[s - 1] < 0.01);
        if (s >= 2) CHECK(trace[s - 2] >= 0.01);
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(evolve(w, pi, std::vector<double>(3, 0.0), 5), std::invalid_argument);
    }
}

TEST_CASE("on a 1-dimensional complex, UD_0 is the lazy skeleton walk") {
    Complex z = build_Z(gen_cycle(5), 1, 3);
    WalkOperator w = updown(z, 0);
    OneSkeleton sk = one_skeleton(z);
    // W = (I + M D^{-1}) / 2, entrywise in exact arithmetic
    for (std::size_t col = 0; col < w.cols; ++col) {
        const Rational deg = sk.graph.weighted_degree(static_cast<int>(col));
        for (const auto& [row, v] : w.col_entries[col]) {
            if (row == col) {
                CHECK(v == make_rational(1, 2));
            } else {
                Rational m_edge = 0;
                for (auto [nb, e] : sk.graph.adj[static_cast<int>(col)])
                    if (nb == static_cast<int>(row)) m_edge = sk.graph.edges[e].w;
                CHECK(v == Rational(m_edge / deg / 2));
            }
        }
    }
}

TEST_CASE("sampled trajectories are seed-deterministic") {
    Complex z = build_Z(gen_cycle(4), 2, 4);
    WalkOperator w = updown(z, 1);
    auto a = sample_walk(w, 0, 50, 99);
    auto b = sample_walk(w, 0, 50, 99);
    CHECK(a == b);
    CHECK(a.size() == 51);
}
