#pragma once

// Brute-force referees. Nothing here uses the subset-sum engines or their
// pruning index; every count walks the raw objects directly.

#include <cstdint>
#include <string>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/graph.hpp"
#include "bc/hypergraph.hpp"
#include "bc/lattice.hpp"

namespace bc::oracle {

template <class T>
struct OracleResult {
    T value{};
    std::string method_tag;
    std::size_t instances = 1;
};

inline constexpr std::uint64_t kColouringCap = 10000000;

// Proper x-colourings by trying every vertex map.
OracleResult<BigInt> colourings(const Graph& g, unsigned x);
// Maps V -> {1..x} with no monochromatic edge.
OracleResult<BigInt> hyper_colourings(const Hypergraph& h, unsigned x);
// d_k(G) for k = 0..|V|.
OracleResult<std::vector<BigInt>> dominating(const Graph& g);
// Philip Hall: μ(0̂,1̂) = Σ_k (-1)^k (number of chains 0̂ = x_0 < ... < x_k = 1̂).
OracleResult<BigInt> mobius(const FiniteLattice& l);
// |∪ M_s| by merging the sets.
OracleResult<BigInt> union_size(const std::vector<std::vector<int>>& sets);

}  // namespace bc::oracle
