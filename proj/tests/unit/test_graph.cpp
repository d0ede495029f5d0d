#include "doctest.h"

#include "bc/corpus.hpp"
#include "bc/graph.hpp"
#include "bc/oracles/oracles.hpp"

using namespace bc;

namespace {
Graph g_of(int n, std::vector<std::pair<int, int>> e) { return Graph::unlabelled(n, std::move(e)); }
}  // namespace

TEST_SUITE("graph-polynomials") {

TEST_CASE("graph validation") {
    CHECK_THROWS(g_of(2, {{0, 0}}));
    CHECK_THROWS(g_of(2, {{0, 1}, {1, 0}}));
    CHECK_THROWS(g_of(2, {{0, 2}}));
}

TEST_CASE("components_spanning") {
    Graph k3 = complete_graph(3);
    CHECK(components_spanning(k3, 0) == 3);
    CHECK(components_spanning(k3, 0b001) == 2);
    CHECK(components_spanning(k3, 0b111) == 1);
}

TEST_CASE("cycles_edge_sets") {
    CHECK(cycles_edge_sets(path_graph(5)).empty());
    CHECK(cycles_edge_sets(star_graph(4)).empty());
    CHECK(cycles_edge_sets(complete_graph(3)).size() == 1);
    auto k4 = cycles(complete_graph(4));
    CHECK(k4.size() == 7);
    int triangles = 0, squares = 0;
    for (const auto& c : k4) (popcount(c.edges) == 3 ? triangles : squares)++;
    CHECK(triangles == 4);
    CHECK(squares == 3);
    CHECK(cycles(complete_graph(5)).size() == 37);
    CHECK_THROWS_AS(cycles_edge_sets(complete_graph(8), 20), CapExceeded);
}

TEST_CASE("chromatic_polynomial") {
    auto k3 = chromatic_polynomial(complete_graph(3), ChromaticMethod::broken_circuit);
    CHECK(k3.polynomial == IntPolynomial{0, 2, -3, 1});
    CHECK(k3.broken_free_counts == std::vector<std::uint64_t>{1, 3, 2, 0});
    CHECK(chromatic_polynomial(complete_graph(3), ChromaticMethod::full).polynomial == k3.polynomial);
    CHECK(chromatic_polynomial(empty_graph(2), ChromaticMethod::full).polynomial == IntPolynomial{0, 0, 1});
    CHECK(chromatic_polynomial(complete_graph(4), ChromaticMethod::broken_circuit).polynomial ==
          IntPolynomial{0, -6, 11, -6, 1});
}

TEST_CASE("chromatic methods, coefficient law and colouring oracle on small graphs") {
    for (const auto& g : corpus::small_graphs(5, false)) {
        auto full = chromatic_polynomial(g, ChromaticMethod::full).polynomial;
        auto bc = chromatic_polynomial(g, ChromaticMethod::broken_circuit);
        CHECK(full == bc.polynomial);
        const int n = g.vertex_count();
        for (std::size_t k = 0; k < bc.broken_free_counts.size(); ++k) {
            BigInt expected = BigInt(bc.broken_free_counts[k]) * ((k % 2) ? -1 : 1);
            CHECK(full.coeff(n - k) == expected);
        }
        for (unsigned x = 1; x <= 3; ++x) CHECK(full.eval(BigInt(x)) == oracle::colourings(g, x).value);
    }
}

TEST_CASE("edge and vertex reorderings do not change P") {
    Graph g = g_of(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {1, 3}});
    auto p = chromatic_polynomial(g, ChromaticMethod::full).polynomial;
    CHECK(chromatic_polynomial(g.with_edge_order({6, 5, 4, 3, 2, 1, 0}), ChromaticMethod::broken_circuit).polynomial == p);
    CHECK(chromatic_polynomial(g.with_vertex_order({4, 2, 0, 1, 3}), ChromaticMethod::broken_circuit).polynomial == p);
}

TEST_CASE("is_cyclically_claw_free") {
    CHECK(is_cyclically_claw_free(complete_graph(3)));
    CHECK(is_cyclically_claw_free(star_graph(3)));
    // C4 with a pendant vertex on cycle vertex 0: vertex 0 has degree 3 and lies on the cycle.
    CHECK_FALSE(is_cyclically_claw_free(g_of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})));
    // Paw: triangle with a pendant. The centre's claw is not induced, but it counts.
    CHECK_FALSE(is_cyclically_claw_free(g_of(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}})));
    CHECK(is_cyclically_claw_free(cycle_graph(6)));
}

TEST_CASE("subgraph_component_polynomial") {
    BiPolynomial one;
    one.add_term(0, 0, 1);
    one.add_term(1, 1, 1);
    CHECK(subgraph_component_polynomial(empty_graph(1)) == one);

    BiPolynomial k3;
    k3.add_term(0, 0, 1);
    k3.add_term(1, 1, 3);
    k3.add_term(2, 1, 3);
    k3.add_term(3, 1, 1);
    CHECK(subgraph_component_polynomial(complete_graph(3)) == k3);

    BiPolynomial sq;  // (1 + xy)^2
    sq.add_term(0, 0, 1);
    sq.add_term(1, 1, 2);
    sq.add_term(2, 2, 1);
    CHECK(subgraph_component_polynomial(empty_graph(2)) == sq);
}

TEST_CASE("q_at_minus1") {
    for (auto m : {QMethod::direct, QMethod::eq5, QMethod::eq6}) {
        CHECK(q_at_minus1(complete_graph(3), m) == IntPolynomial{1, -1});
        CHECK(q_at_minus1(empty_graph(3), m) == IntPolynomial::binomial_power(-1, 3).scaled(BigInt(-1)));
        CHECK(q_at_minus1(complete_graph(3), m).eval(BigInt(-1)) == 2);
    }
    CHECK_THROWS_AS(q_at_minus1(g_of(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}), QMethod::eq6), PreconditionViolation);
}

TEST_CASE("q_at_minus1 agrees with Q(G,x,y) at x = -1") {
    for (const auto& g : corpus::cyclically_claw_free_graphs(60, 8, 2)) {
        auto direct = q_at_minus1(g, QMethod::direct);
        CHECK(subgraph_component_polynomial(g).eval_x(BigInt(-1)) == direct);
        CHECK(q_at_minus1(g, QMethod::eq5) == direct);
        CHECK(q_at_minus1(g, QMethod::eq6) == direct);
    }
}

TEST_CASE("domination_polynomial") {
    Graph p2 = path_graph(2), p3 = path_graph(3);
    for (auto m : {DominationMethod::direct, DominationMethod::bnh, DominationMethod::bnh_pruned}) {
        CHECK(domination_polynomial(p2, m) == IntPolynomial{0, 2, 1});
        CHECK(domination_polynomial(p3, m) == IntPolynomial{0, 1, 3, 1});
    }
    CHECK(domination_polynomial(empty_graph(1), DominationMethod::direct) == IntPolynomial{0, 1});
    CHECK(domination_polynomial(empty_graph(1), DominationMethod::bnh) == IntPolynomial{0, 1});
    CHECK_THROWS_AS(domination_polynomial(empty_graph(1), DominationMethod::bnh_pruned), PreconditionViolation);
}

TEST_CASE("domination methods agree with the oracle") {
    auto graphs = corpus::small_graphs(5, false);
    auto more = corpus::random_graphs(40, 6, 8, 17);
    graphs.insert(graphs.end(), more.begin(), more.end());
    for (const auto& g : graphs) {
        auto direct = domination_polynomial(g, DominationMethod::direct);
        CHECK(domination_polynomial(g, DominationMethod::bnh) == direct);
        auto counts = oracle::dominating(g).value;
        for (std::size_t k = 0; k < counts.size(); ++k) CHECK(direct.coeff(k) == counts[k]);
        bool isolated = false;
        for (int v = 0; v < g.vertex_count(); ++v) isolated = isolated || g.degree(v) == 0;
        if (!isolated) CHECK(domination_polynomial(g, DominationMethod::bnh_pruned) == direct);
    }
}

TEST_CASE("closed neighbourhood absorption") {
    for (const auto& g : corpus::small_graphs(5, false)) {
        const int n = g.vertex_count();
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 0) continue;
            Mask nv = g.closed_neighbourhood(bit(v));
            for (Mask a = 0; a < bit(n); ++a)
                if (is_subset(nv, a)) CHECK(g.closed_neighbourhood(a & ~bit(v)) == g.closed_neighbourhood(a));
        }
    }
}

TEST_CASE("degree1_upset_order") {
    auto p3 = degree1_upset_order(path_graph(3));
    CHECK(p3.order == std::vector<int>{1, 0, 2});
    REQUIRE(p3.pendant.size() == 1);
    CHECK(p3.pendant[0] == bit(0));
    CHECK(domination_polynomial_pruned(p3.graph, p3.pendant) == IntPolynomial{0, 1, 3, 1});

    CHECK(degree1_upset_order(cycle_graph(4)).pendant.empty());

    auto star = degree1_upset_order(star_graph(3));
    CHECK(domination_polynomial_pruned(star.graph, star.pendant) ==
          domination_polynomial(star_graph(3), DominationMethod::direct));

    CHECK_THROWS_AS(degree1_upset_order(empty_graph(2)), PreconditionViolation);
    CHECK_THROWS_AS(degree1_upset_order(g_of(4, {{0, 1}, {2, 3}})), PreconditionViolation);
}

TEST_CASE("degree1 refinement agrees on random graphs") {
    for (const auto& g : corpus::random_graphs(80, 3, 8, 29)) {
        UpsetOrder u;
        try {
            u = degree1_upset_order(g);
        } catch (const PreconditionViolation&) {
            continue;
        }
        CHECK(domination_polynomial_pruned(u.graph, u.pendant) == domination_polynomial(g, DominationMethod::direct));
    }
}

TEST_CASE("graph corpus size") {
    CHECK(corpus::small_graphs(6, true).size() == 143);
    CHECK(corpus::small_graphs(4, false).size() == 1 + 2 + 4 + 11);
    for (const auto& g : corpus::cyclically_claw_free_graphs(50, 8, 3)) CHECK(is_cyclically_claw_free(g));
}

}
