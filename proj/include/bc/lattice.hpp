#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/whitney.hpp"

namespace bc {

inline constexpr int kLatticeCap = 128;
inline constexpr int kCrosscutCap = 20;

// Finite lattice given by covers. Elements are reordered into a linear
// extension, so index 0 is the bottom and index size()-1 the top.
class FiniteLattice {
public:
    FiniteLattice() = default;
    FiniteLattice(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& covers);

    int size() const { return static_cast<int>(labels_.size()); }
    int bottom() const { return 0; }
    int top() const { return size() - 1; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_.at(x); }
    int index_of(const std::string& label) const;

    bool leq(int a, int b) const { return leq_[a * size() + b] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool covers(int a, int b) const { return cover_[a * size() + b] != 0; }  // a ⋖ b
    int meet(int a, int b) const { return meet_[a * size() + b]; }
    int join(int a, int b) const { return join_[a * size() + b]; }
    // Over lattice elements indexed by `elements`; ⋀∅ = top, ⋁∅ = bottom.
    int meet_of(const std::vector<int>& elements, Mask a) const;
    int join_of(const std::vector<int>& elements, Mask a) const;
    std::vector<int> atoms() const;
    std::vector<int> coatoms() const;
    bool nontrivial() const { return size() > 2; }

private:
    std::vector<std::string> labels_;
    std::vector<char> leq_;
    std::vector<char> cover_;
    std::vector<int> meet_;
    std::vector<int> join_;
};

// μ_L(x) = μ(0̂, x) for every x.
std::vector<BigInt> mobius_recursive(const FiniteLattice& l);
inline BigInt mobius_of_lattice(const FiniteLattice& l) { return mobius_recursive(l).back(); }

bool is_crosscut(const FiniteLattice& l, const std::vector<int>& c);
// Every crosscut of L, stopping after `limit` of them.
std::vector<std::vector<int>> enumerate_crosscuts(const FiniteLattice& l, std::size_t limit = 100000);

// Crosscut sum Σ_{A ⊆ C, ⋀A = 0̂, ⋁A = 1̂} (-1)^|A|.
BigInt rota_crosscut(const FiniteLattice& l, const std::vector<int>& c, Exec exec = Exec::parallel);

// A crosscut with its auxiliary partial order ⊴ (indices into `elements`).
struct Crosscut {
    std::vector<int> elements;
    FinitePoset order;
};

struct BlassSaganFamily {
    std::vector<Mask> broken;     // subsets of C, as masks over C's indices
    std::vector<int> witness;     // index into C of min_b c(B, b), per broken set
    std::vector<int> extension;   // the linear extension of ⊴ used for "min"
};

// atoms_mode drops the ⋀B < c condition (only meaningful for C = A(L)).
BlassSaganFamily blass_sagan_B(const FiniteLattice& l, const Crosscut& c, bool atoms_mode = false);

struct BlassSaganResult {
    BigInt restricted;
    BigInt crosscut;
    BigInt mu;
};

// Restricted crosscut sum with a sub-family of ℬ (nullptr = all of ℬ).
BlassSaganResult blass_sagan_mu(const FiniteLattice& l, const Crosscut& c, const std::vector<Mask>* subfamily = nullptr,
                                bool atoms_mode = false, Exec exec = Exec::parallel);

// The dual-form circuit family {B ∪ {witness}}, and the check that broken sets
// in the reversed extension order recover ℬ exactly.
bool blass_sagan_dual_form_consistent(const BlassSaganFamily& family, int crosscut_size);

FiniteLattice boolean_lattice(int n);
FiniteLattice divisor_lattice(std::uint64_t n);
FiniteLattice partition_lattice(int n);

}  // namespace bc
