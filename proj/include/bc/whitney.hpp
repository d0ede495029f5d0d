#pragma once

// Generalized broken-circuit engine.
//
// Given a linearly ordered ground set S (element i <-> bit i, order = index
// order), a family of circuits and a set function f with
//     f(A) + f(A \ {max C}) = 0   for every circuit C and every A ⊇ C,
// the sum of f over all subsets equals the sum over subsets containing no
// broken circuit C \ {max C}. This header provides the exhaustive check of that
// cancellation condition, both sums, and the poset/semilattice/inclusion-
// exclusion specializations built on them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/kernels.hpp"
#include "bc/subset.hpp"

namespace bc {

enum class Exec { serial, parallel };

class OrderedGroundSet {
public:
    OrderedGroundSet() = default;
    explicit OrderedGroundSet(std::vector<std::string> labels, int cap = kDefaultEnumerationCap);
    // Ground set 0..n-1 labelled by decimal indices.
    static OrderedGroundSet indexed(int n, int cap = kDefaultEnumerationCap);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    int index_of(const std::string& label) const;
    Mask subset(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels_of(Mask m) const;
    // Element perm[i] of this set becomes element i of the result.
    OrderedGroundSet permuted(const std::vector<int>& perm) const;

private:
    std::vector<std::string> labels_;
};

// A broken set together with the circuit it was derived from.
struct BrokenCircuit {
    Mask broken = 0;
    Mask witness = 0;

    friend bool operator==(const BrokenCircuit&, const BrokenCircuit&) = default;
};

// {C \ {max C}}: deduplicated, first witness kept, in order of first appearance.
std::vector<BrokenCircuit> derive_broken_circuits(const std::vector<Mask>& circuits, int n);
std::vector<Mask> broken_sets(const std::vector<BrokenCircuit>& bcs);
// Checks that every member of `broken` is C \ {max C} for some circuit.
bool is_broken_subfamily(const std::vector<Mask>& broken, const std::vector<Mask>& circuits);

struct CancellationReport {
    bool ok = true;
    std::uint64_t pairs_checked = 0;
    Mask circuit = 0;  // first violating circuit, when !ok
    Mask subset = 0;   // first violating A ⊇ circuit, when !ok
};

// Exhaustive check of f(A) + f(A \ {max C}) = 0 over all C and A ⊇ C.
template <class Acc, class F>
CancellationReport verify_cancellation(int n, const std::vector<Mask>& circuits, F&& f,
                                       int cap = kDefaultVerifyCap) {
    require_cap(n, cap, "verify_cancellation");
    CancellationReport report;
    const Mask all = full_mask(n);
    for (Mask c : circuits) {
        if (c == 0) throw PreconditionViolation("empty circuit");
        if (!is_subset(c, all)) throw PreconditionViolation("circuit not a subset of the ground set");
        const Mask top = bit(max_element(c));
        const Mask free = all & ~c;
        // All supersets of c: c | s for s ranging over submasks of free.
        Mask s = free;
        while (true) {
            const Mask a = c | s;
            Acc sum{};
            sum += f(a);
            sum += f(a & ~top);
            ++report.pairs_checked;
            if (!(sum == Acc{})) {
                report.ok = false;
                report.circuit = c;
                report.subset = a;
                return report;
            }
            if (s == 0) break;
            s = (s - 1) & free;
        }
    }
    return report;
}

template <class Acc, class F>
Acc sum_full(int n, F&& f, Exec exec = Exec::parallel, int cap = kDefaultEnumerationCap) {
    require_cap(n, cap, "sum_full");
    return exec == Exec::serial ? serial::sum_full<Acc>(n, f) : parallel::sum_full<Acc>(n, f);
}

// Sum over subsets A with B ⊄ A for every B in `broken`. An empty broken set
// excludes everything, so the result is zero.
template <class Acc, class F>
Acc sum_pruned(int n, const std::vector<Mask>& broken, F&& f, Exec exec = Exec::parallel,
               int cap = kDefaultEnumerationCap) {
    require_cap(n, cap, "sum_pruned");
    PruneIndex index(n, broken);
    return exec == Exec::serial ? serial::sum_pruned<Acc>(index, f) : parallel::sum_pruned<Acc>(index, f);
}

// Calls visit(A) for each broken-set-avoiding subset, serially, in DFS order.
template <class Visit>
void for_each_avoiding(int n, const std::vector<Mask>& broken, Visit&& visit,
                       int cap = kDefaultEnumerationCap) {
    require_cap(n, cap, "for_each_avoiding");
    PruneIndex index(n, broken);
    serial::for_each_avoiding(index, visit);
}

// (b_0, ..., b_n): number of avoiding subsets of each cardinality.
std::vector<std::uint64_t> enumerate_avoiding(int n, const std::vector<Mask>& broken, Exec exec = Exec::parallel,
                                              int cap = kDefaultEnumerationCap);

// Partial order on 0..n-1 stored as a dense reflexive relation.
class FinitePoset {
public:
    FinitePoset() = default;
    // Validates reflexivity, antisymmetry and transitivity.
    FinitePoset(int n, std::vector<char> leq);
    // Reflexive-transitive closure of the given strict relations (a < b).
    static FinitePoset from_less_pairs(int n, const std::vector<std::pair<int, int>>& less);
    static FinitePoset chain(int n);
    static FinitePoset antichain(int n);

    int size() const { return n_; }
    bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    Mask maximal() const;
    // Lexicographically smallest topological order (by element index).
    std::vector<int> linear_extension() const;
    std::optional<int> join(int a, int b) const;
    bool is_upper_semilattice() const;
    bool is_chain(Mask m) const;
    FinitePoset dual() const;

private:
    int n_ = 0;
    std::vector<char> leq_;
};

template <class Acc>
struct PosetSum {
    Acc restricted{};
    std::optional<Acc> full;
    bool condition_verified = false;
};

namespace detail {

// Re-expresses a poset problem in the positions of a linear extension so the
// engine's "max" is the extension order. ext[p] = element at position p.
struct ExtensionFrame {
    std::vector<int> ext;
    std::vector<int> pos;

    explicit ExtensionFrame(const FinitePoset& p) : ext(p.linear_extension()), pos(ext.size()) {
        for (std::size_t i = 0; i < ext.size(); ++i) pos[ext[i]] = static_cast<int>(i);
    }
    Mask to_positions(Mask m) const { return permute_mask(m, pos); }
    Mask to_elements(Mask m) const { return permute_mask(m, ext); }
};

template <class Acc, class F>
PosetSum<Acc> poset_reduction(const FinitePoset& p, const std::vector<Mask>& element_circuits, F&& f,
                              bool verify, Exec exec) {
    const int n = p.size();
    ExtensionFrame frame(p);
    std::vector<Mask> circuits;
    circuits.reserve(element_circuits.size());
    for (Mask c : element_circuits) circuits.push_back(frame.to_positions(c));
    auto g = [&](Mask positions) { return f(frame.to_elements(positions)); };

    PosetSum<Acc> out;
    if (verify && n <= kDefaultVerifyCap) {
        auto report = verify_cancellation<Acc>(n, circuits, g);
        if (!report.ok) {
            throw PreconditionViolation("cancellation condition f(A) + f(A \\ {max C}) = 0 fails at subset mask " +
                                        std::to_string(frame.to_elements(report.subset)));
        }
        out.condition_verified = true;
    }
    out.restricted = sum_pruned<Acc>(n, broken_sets(derive_broken_circuits(circuits, n)), g, exec);
    if (n <= kDefaultEnumerationCap) out.full = sum_full<Acc>(n, g, exec);
    return out;
}

}  // namespace detail

// Sum over subsets of the maximal elements; circuits {s, t} with s < t.
template <class Acc, class F>
PosetSum<Acc> sum_over_maxima(const FinitePoset& p, F&& f, bool verify = true, Exec exec = Exec::parallel) {
    std::vector<Mask> circuits;
    for (int s = 0; s < p.size(); ++s)
        for (int t = 0; t < p.size(); ++t)
            if (p.less(s, t)) circuits.push_back(bit(s) | bit(t));
    return detail::poset_reduction<Acc>(p, circuits, f, verify, exec);
}

// Sum over chains of an upper semilattice; circuits {s, t, s ∨ t} for s || t.
template <class Acc, class F>
PosetSum<Acc> sum_over_chains(const FinitePoset& p, F&& f, bool verify = true, Exec exec = Exec::parallel) {
    if (!p.is_upper_semilattice()) throw PreconditionViolation("poset is not an upper semilattice");
    std::vector<Mask> circuits;
    for (int s = 0; s < p.size(); ++s)
        for (int t = s + 1; t < p.size(); ++t)
            if (!p.comparable(s, t)) circuits.push_back(bit(s) | bit(t) | bit(*p.join(s, t)));
    return detail::poset_reduction<Acc>(p, circuits, f, verify, exec);
}

template <class T>
struct MaxMinResult {
    T lhs{};     // Σ_{|A| ≥ k} (-1)^{|A|-k} min_k(A), all subsets
    T pruned{};  // same sum restricted to subsets avoiding the broken circuits
    T rhs{};     // C(n-1, k-1) · max
};

// Works for any totally ordered exact group type (BigInt, Rational).
template <class T>
MaxMinResult<T> maxmin_identity(const std::vector<T>& values, int k, Exec exec = Exec::parallel) {
    const int n = static_cast<int>(values.size());
    if (k < 1 || k > n) throw PreconditionViolation("k must satisfy 1 <= k <= |values|");
    require_cap(n, 20, "maxmin_identity");

    auto kth_min = [&](Mask a, const std::vector<T>& vals) {
        std::vector<T> picked;
        for (int i : elements_of(a)) picked.push_back(vals[i]);
        std::nth_element(picked.begin(), picked.begin() + (k - 1), picked.end());
        return picked[k - 1];
    };
    auto term = [&](const std::vector<T>& vals) {
        return [&, vals_ptr = &vals](Mask a) -> T {
            const int size = popcount(a);
            if (size < k) return T{};
            T m = kth_min(a, *vals_ptr);
            return ((size - k) % 2 == 0) ? m : T(-m);
        };
    };

    MaxMinResult<T> r;
    r.lhs = sum_full<T>(n, term(values), exec);

    // Order S so that s < t implies x_s <= x_t, then prune with all (k+1)-subsets.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    std::vector<T> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = values[order[i]];
    std::vector<Mask> circuits;
    for (Mask c = 0; c < bit(n); ++c)
        if (popcount(c) == k + 1) circuits.push_back(c);
    r.pruned = sum_pruned<T>(n, broken_sets(derive_broken_circuits(circuits, n)), term(sorted), exec);

    T mx = *std::max_element(values.begin(), values.end());
    r.rhs = T(binomial(n - 1, k - 1)) * mx;
    return r;
}

// Finite family {M_s} over a universe of integer atoms; sets kept sorted and unique.
class IndexedSetFamily {
public:
    IndexedSetFamily() = default;
    explicit IndexedSetFamily(std::vector<std::vector<int>> sets);

    int size() const { return static_cast<int>(sets_.size()); }
    const std::vector<int>& set(int s) const { return sets_.at(s); }
    // |∩_{a ∈ A} M_a|, with A nonempty.
    std::size_t intersection_size(Mask a) const;
    bool intersection_within(Mask a, int target) const;
    std::size_t union_size() const;

private:
    std::vector<std::vector<int>> sets_;
    std::vector<std::vector<std::uint64_t>> bits_;
    std::size_t words_ = 0;
};

struct WitnessedBroken {
    Mask broken = 0;
    int witness = -1;  // c(B) > max B with ∩_{b∈B} M_b ⊆ M_c
};

struct UnionSizeResult {
    BigInt restricted;
    BigInt direct;
};

UnionSizeResult restricted_union_size(const IndexedSetFamily& family, const std::vector<WitnessedBroken>& broken,
                                      Exec exec = Exec::parallel);

// Chain-restricted inclusion-exclusion over an upper semilattice with
// M_s ∩ M_t ⊆ M_{s∨t}.
UnionSizeResult narushima_union(const FinitePoset& p, const IndexedSetFamily& family, Exec exec = Exec::parallel);

}  // namespace bc
