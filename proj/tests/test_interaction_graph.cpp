#include <doctest.h>

#include <random>

#include "boolnet/builtins.hpp"
#include "boolnet/interaction_graph.hpp"
#include "boolnet/iteration_graph.hpp"
#include "oracles.hpp"

using namespace boolnet;

namespace {

// Independent finite-difference evaluation, written against the definition
// rather than through JacobianMatrix.
int jacobian_entry_oracle(const BooleanMap& f, std::uint32_t x, int i, int j) {
    const std::uint32_t flipped = x ^ (1u << (f.n() - j));
    const int fi_x = f.component_image(i, x) ? 1 : 0;
    const int fi_flipped = f.component_image(i, flipped) ? 1 : 0;
    const int xj = (x >> (f.n() - j)) & 1;
    const int denom = (1 - xj) - xj;  // +1 when x_j = 0, -1 when x_j = 1
    return (fi_flipped - fi_x) / denom;
}

}  // namespace

TEST_CASE("discrete Jacobian") {
    SUBCASE("negation on one bit") {
        const JacobianMatrix jac =
            discrete_jacobian(BooleanMap::negation(1), Configuration(1, 0));
        CHECK(jac.at(1, 1) == -1);
    }
    SUBCASE("identity is the positive unit matrix everywhere") {
        const BooleanMap id = BooleanMap::identity(3);
        for (std::uint32_t x = 0; x < 8; ++x) {
            const JacobianMatrix jac = discrete_jacobian(id, Configuration(3, x));
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) CHECK(jac.at(i, j) == (i == j ? 1 : 0));
        }
    }
    SUBCASE("negation on three bits is minus the unit matrix at all 8 points") {
        const BooleanMap neg = BooleanMap::negation(3);
        for (std::uint32_t x = 0; x < 8; ++x) {
            const JacobianMatrix jac = discrete_jacobian(neg, Configuration(3, x));
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) CHECK(jac.at(i, j) == (i == j ? -1 : 0));
        }
    }
    SUBCASE("agrees with the definition on random maps") {
        std::mt19937_64 rng(211);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const BooleanMap f = oracles::random_map(n, rng);
            const std::uint32_t x = static_cast<std::uint32_t>(rng() % f.size());
            const JacobianMatrix jac = discrete_jacobian(f, Configuration(n, x));
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(jac.at(i, j) == jacobian_entry_oracle(f, x, i, j));
        }
    }
}

TEST_CASE("Jacobian columns vanish for ignored inputs") {
    // f_i that never reads x_j has a zero (i, j) entry at every point
    std::mt19937_64 rng(223);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const BooleanMap f = oracles::random_map_last_detached(n, rng);
        for (std::uint32_t x = 0; x < f.size(); ++x) {
            const JacobianMatrix jac = discrete_jacobian(f, Configuration(n, x));
            for (int i = 1; i < n; ++i) CHECK(jac.at(i, n) == 0);
        }
    }
}

TEST_CASE("interaction graph of the named maps") {
    SUBCASE("negation: one negative loop per vertex, nothing else") {
        for (int n : {1, 2, 4}) {
            const SignedDigraph g = build_interaction_graph(BooleanMap::negation(n));
            for (int v = 1; v <= n; ++v) {
                CHECK(loop_signs(g, v).negative);
                CHECK_FALSE(loop_signs(g, v).positive);
            }
            CHECK(g.arcs().size() == static_cast<std::size_t>(n));
        }
    }
    SUBCASE("identity: one positive loop per vertex") {
        const SignedDigraph g = build_interaction_graph(BooleanMap::identity(3));
        for (int v = 1; v <= 3; ++v) {
            CHECK(loop_signs(g, v).positive);
            CHECK_FALSE(loop_signs(g, v).negative);
        }
        CHECK(g.arcs().size() == 3);
    }
    SUBCASE("restriction only shrinks the interaction graph") {
        std::mt19937_64 rng(227);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 4);
            const BooleanMap f = oracles::random_map(n, rng);
            const SignedDigraph full = build_interaction_graph(f);
            for (bool alpha : {false, true}) {
                const SignedDigraph sub = build_interaction_graph(restrict_last(f, alpha));
                for (const auto& [from, sign, to] : sub.arcs())
                    CHECK(full.has_arc(from, sign, to));
            }
        }
    }
}

TEST_CASE("multi-vertex cycle detection") {
    const SignedDigraph neg = build_interaction_graph(BooleanMap::negation(3));
    CHECK_FALSE(has_multi_vertex_cycle(neg));

    SignedDigraph two_cycle(2);
    two_cycle.add_arc(1, 1, 2);
    two_cycle.add_arc(2, -1, 1);
    CHECK(has_multi_vertex_cycle(two_cycle));

    SignedDigraph path(3);
    path.add_arc(1, 1, 2);
    path.add_arc(2, 1, 3);
    CHECK_FALSE(has_multi_vertex_cycle(path));

    SignedDigraph loop_only(2);
    loop_only.add_arc(1, -1, 1);
    loop_only.add_arc(2, 1, 2);
    CHECK_FALSE(has_multi_vertex_cycle(loop_only));

    SignedDigraph triangle(3);
    triangle.add_arc(1, 1, 2);
    triangle.add_arc(2, 1, 3);
    triangle.add_arc(3, -1, 1);
    CHECK(has_multi_vertex_cycle(triangle));
}

TEST_CASE("loop signs") {
    SignedDigraph g(3);
    g.add_arc(1, 1, 1);
    g.add_arc(2, -1, 2);
    g.add_arc(2, 1, 2);
    CHECK(loop_signs(g, 1).positive);
    CHECK_FALSE(loop_signs(g, 1).negative);
    CHECK(loop_signs(g, 2).positive);
    CHECK(loop_signs(g, 2).negative);
    CHECK_FALSE(loop_signs(g, 3).positive);
    CHECK_FALSE(loop_signs(g, 3).negative);
    CHECK_THROWS_AS(loop_signs(g, 0), std::invalid_argument);
    CHECK_THROWS_AS(loop_signs(g, 4), std::invalid_argument);
}

TEST_CASE("sufficient connectivity conditions") {
    CHECK(satisfies_connectivity_conditions(build_interaction_graph(BooleanMap::negation(2))));
    CHECK_FALSE(
        satisfies_connectivity_conditions(build_interaction_graph(BooleanMap::identity(2))));

    SUBCASE("condition 1 violation: a 2-cycle plus negative loops") {
        SignedDigraph g(2);
        g.add_arc(1, 1, 2);
        g.add_arc(2, 1, 1);
        g.add_arc(1, -1, 1);
        g.add_arc(2, -1, 2);
        const ConnectivityConditions c = connectivity_conditions(g);
        CHECK_FALSE(c.cycle_free);
        CHECK(c.positive_loops_covered);
        CHECK(c.negative_loops_reach_all);
        CHECK_FALSE(satisfies_connectivity_conditions(g));
    }
    SUBCASE("condition 3 needs reflexive coverage of isolated vertices") {
        SignedDigraph g(2);
        g.add_arc(1, -1, 1);
        // vertex 2 has no loop and no incoming arc
        const ConnectivityConditions c = connectivity_conditions(g);
        CHECK(c.cycle_free);
        CHECK(c.positive_loops_covered);
        CHECK_FALSE(c.negative_loops_reach_all);
    }
    SUBCASE("a negative loop covers its own vertex") {
        SignedDigraph g(1);
        g.add_arc(1, -1, 1);
        CHECK(satisfies_connectivity_conditions(g));
    }
}

TEST_CASE("the sufficient conditions always deliver a chaotic map") {
    std::mt19937_64 rng(233);
    int accepted = 0;
    while (accepted < 2000) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto f = oracles::sample_condition_candidate(n, rng);
        if (!f) continue;
        ++accepted;
        CHECK(is_chaotic(*f));
    }
}

TEST_CASE("the conditions are sufficient, not necessary") {
    // chaotic map whose interaction graph contains a 2-cycle, found by search
    const BooleanMap f(2, {1, 3, 0, 2});  // f_1 = x_2, f_2 = not x_1
    CHECK(is_chaotic(f));
    const SignedDigraph g = build_interaction_graph(f);
    CHECK(g.has_arc(2, 1, 1));
    CHECK(g.has_arc(1, -1, 2));
    CHECK(has_multi_vertex_cycle(g));
    CHECK_FALSE(satisfies_connectivity_conditions(g));
}

TEST_CASE("remove_vertex") {
    SUBCASE("removing an isolated vertex keeps the rest") {
        SignedDigraph g(3);
        g.add_arc(1, 1, 2);
        g.add_arc(2, -1, 1);
        const SignedDigraph cut = remove_vertex(g, 3);
        CHECK(cut.n() == 2);
        CHECK(cut.has_arc(1, 1, 2));
        CHECK(cut.has_arc(2, -1, 1));
        CHECK(cut.arcs().size() == 2);
    }
    SUBCASE("relabeling preserves order") {
        SignedDigraph g(3);
        g.add_arc(1, 1, 3);
        g.add_arc(3, -1, 1);
        const SignedDigraph cut = remove_vertex(g, 2);
        CHECK(cut.has_arc(1, 1, 2));
        CHECK(cut.has_arc(2, -1, 1));
    }
    SUBCASE("negation on 2 bits loses one negative loop") {
        CHECK(remove_vertex(build_interaction_graph(BooleanMap::negation(2)), 2) ==
              build_interaction_graph(BooleanMap::negation(1)));
    }
    SUBCASE("restriction equals vertex removal when n feeds only itself") {
        std::mt19937_64 rng(239);
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 4);
            const BooleanMap f = oracles::random_map_last_detached(n, rng);
            const SignedDigraph expected = remove_vertex(build_interaction_graph(f), n);
            for (bool alpha : {false, true})
                CHECK(build_interaction_graph(restrict_last(f, alpha)) == expected);
        }
    }
    CHECK_THROWS_AS(remove_vertex(SignedDigraph(1), 1), std::invalid_argument);
}

TEST_CASE("signed digraph text format round-trip") {
    const SignedDigraph g = build_interaction_graph(*builtin_map("F5"));
    const SignedDigraph parsed = SignedDigraph::parse(g.format(), g.n());
    CHECK(parsed == g);

    const SignedDigraph neg = SignedDigraph::parse("1 - 1\n2 - 2\n");
    CHECK(neg == build_interaction_graph(BooleanMap::negation(2)));

    CHECK_THROWS_AS(SignedDigraph::parse("1 ? 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(SignedDigraph::parse("1 +\n"), std::invalid_argument);
    CHECK_THROWS_AS(SignedDigraph::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SignedDigraph::parse("0 + 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(SignedDigraph::parse("99999999999999 + 1\n"), std::invalid_argument);
}

TEST_CASE("signed digraph DOT export colors arcs by sign") {
    SignedDigraph g(2);
    g.add_arc(1, -1, 2);
    g.add_arc(2, 1, 1);
    const std::string dot = g.to_dot();
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("1 -> 2 [color=red") != std::string::npos);
    CHECK(dot.find("2 -> 1 [color=black") != std::string::npos);
}
