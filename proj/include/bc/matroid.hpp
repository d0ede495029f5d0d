#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/graph.hpp"
#include "bc/whitney.hpp"

namespace bc {

inline constexpr int kMatroidValidateCap = 12;
inline constexpr int kRankTableCap = 22;

// Matroid given by its circuits over an ordered ground set.
class Matroid {
public:
    Matroid() = default;
    // Checks non-emptiness, incomparability and (for |E| <= 12) circuit elimination.
    Matroid(OrderedGroundSet ground, std::vector<Mask> circuits);

    int size() const { return ground_.size(); }
    const OrderedGroundSet& ground() const { return ground_; }
    const std::vector<Mask>& circuits() const { return circuits_; }
    bool validated() const { return validated_; }

    // Greedy in ground order.
    int rank(Mask a) const;
    // Table lookup (falls back to greedy above the table cap).
    int rank_fast(Mask a) const { return table_.empty() ? rank(a) : table_[a]; }
    int full_rank() const { return rank_fast(full_mask(size())); }
    bool independent(Mask a) const;

private:
    void build_table();

    OrderedGroundSet ground_;
    std::vector<Mask> circuits_;
    std::vector<std::uint8_t> table_;
    bool validated_ = false;
};

Matroid graphic_matroid(const Graph& g);
Matroid uniform_matroid(int r, int n);
Matroid free_matroid(int n);

enum class CharMethod { full, heron };

struct CharacteristicResult {
    IntPolynomial polynomial;
    std::vector<std::uint64_t> broken_free_counts;  // b_k, heron only
};

CharacteristicResult characteristic_polynomial(const Matroid& m, CharMethod method, Exec exec = Exec::parallel);

enum class BetaMethod { full, broken_circuit, derivative };

BigInt beta_invariant(const Matroid& m, BetaMethod method, Exec exec = Exec::parallel);

}  // namespace bc
