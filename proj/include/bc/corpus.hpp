#pragma once

// Test and verification corpora. Everything is deterministic given the seed.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bc/convex.hpp"
#include "bc/graph.hpp"
#include "bc/lattice.hpp"
#include "bc/matroid.hpp"

namespace bc::corpus {

// All graphs with 1..max_vertices vertices up to isomorphism (brute-force
// canonical form), optionally connected only. Feasible for max_vertices <= 6.
std::vector<Graph> small_graphs(int max_vertices, bool connected_only);

std::vector<Graph> random_graphs(int count, int min_vertices, int max_vertices, std::uint64_t seed);

// Disjoint unions of random trees and cycles: exactly the cyclically
// claw-free graphs, since a cycle vertex of degree >= 3 is a claw centre.
std::vector<Graph> cyclically_claw_free_graphs(int count, int max_vertices, std::uint64_t seed);

std::vector<Graph> named_graphs();

struct PruningInstance {
    std::string name;
    int n = 0;
    std::vector<Mask> circuits;
    std::function<BigInt(Mask)> f;
};

// Circuit-closure instances f(A) = (-1)^|A| γ(h(A)) plus chromatic, rank and
// domination instances, all with |S| <= max_size.
std::vector<PruningInstance> pruning_instances(int count, int max_size, std::uint64_t seed);

struct GeometryInstance {
    std::string name;
    ClosureSystem closure;
};

std::vector<GeometryInstance> geometries(int count, int max_size, std::uint64_t seed);

struct LatticeInstance {
    std::string name;
    FiniteLattice lattice;
};

// B2..B4, divisor lattices of 12/30/60, partition lattices Π3 and Π4.
std::vector<LatticeInstance> lattices();

std::vector<Matroid> matroids();

// Random partial order on k elements.
FinitePoset random_order(int k, std::mt19937_64& rng);

}  // namespace bc::corpus
