#include "doctest.h"

#include "bc/graph.hpp"
#include "bc/hypergraph.hpp"
#include "bc/lattice.hpp"
#include "bc/oracles/oracles.hpp"

using namespace bc;

TEST_SUITE("test-oracles") {

TEST_CASE("colourings") {
    CHECK(oracle::colourings(complete_graph(3), 3).value == 6);
    CHECK(oracle::colourings(complete_graph(3), 2).value == 0);
    CHECK(oracle::colourings(empty_graph(2), 2).value == 4);
    CHECK_THROWS_AS(oracle::colourings(empty_graph(9), 10), CapExceeded);
}

TEST_CASE("hyper_colourings") {
    Hypergraph one = Hypergraph::from_lists({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(oracle::hyper_colourings(one, 2).value == 6);
    CHECK(oracle::hyper_colourings(one, 1).value == 0);
    Hypergraph none = Hypergraph::from_lists({"a", "b", "c"}, {});
    CHECK(oracle::hyper_colourings(none, 3).value == 27);
}

TEST_CASE("dominating") {
    CHECK(oracle::dominating(path_graph(2)).value == std::vector<BigInt>{0, 2, 1});
    CHECK(oracle::dominating(empty_graph(1)).value == std::vector<BigInt>{0, 1});
    CHECK(oracle::dominating(path_graph(3)).value == std::vector<BigInt>{0, 1, 3, 1});
}

TEST_CASE("mobius") {
    CHECK(oracle::mobius(boolean_lattice(3)).value == -1);
    CHECK(oracle::mobius(partition_lattice(3)).value == 2);
    FiniteLattice chain({"0", "1", "2"}, {{0, 1}, {1, 2}});
    CHECK(oracle::mobius(chain).value == 0);
}

TEST_CASE("union_size") {
    CHECK(oracle::union_size({{1, 2}, {2, 3}, {2}}).value == 3);
    CHECK(oracle::union_size({}).value == 0);
}

}
