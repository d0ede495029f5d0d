#pragma once

// Closure systems, convex geometries and the free-set reduction.
//
// Closure systems are stored extensionally: the list of closed sets plus a
// hull table over all 2^n subsets, computed once by
//     hull(A) = A                          if A is closed,
//     hull(A) = ∩_{e ∉ A} hull(A ∪ {e})    otherwise,
// which is the intersection of all closed supersets of A.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "bc/algebra.hpp"
#include "bc/subset.hpp"
#include "bc/whitney.hpp"

namespace bc {

inline constexpr int kClosureCap = 20;

class ClosureSystem {
public:
    ClosureSystem() = default;
    // Validates S ∈ closed and closure under intersection.
    ClosureSystem(int n, std::vector<Mask> closed);

    int size() const { return n_; }
    const std::vector<Mask>& closed_sets() const { return closed_; }
    bool is_closed(Mask a) const { return is_closed_[a] != 0; }
    Mask hull(Mask a) const { return hull_[a]; }

private:
    int n_ = 0;
    std::vector<Mask> closed_;
    std::vector<char> is_closed_;
    std::vector<Mask> hull_;
};

// {a ∈ A : a ∉ h(A \ {a})}, the extreme points of A.
Mask extreme_points(const ClosureSystem& cs, Mask a);

struct BasisFailure {
    Mask closed_set = 0;
    Mask extreme = 0;  // hull(extreme) != closed_set
};

// First closed set whose extreme points fail to generate it, if any.
std::optional<BasisFailure> find_basis_failure(const ClosureSystem& cs);

// A closure system in which every closed set has a unique basis.
class ConvexGeometry {
public:
    explicit ConvexGeometry(ClosureSystem cs);

    const ClosureSystem& closure() const { return cs_; }
    int size() const { return cs_.size(); }
    Mask hull(Mask a) const { return cs_.hull(a); }
    bool is_closed(Mask a) const { return cs_.is_closed(a); }
    bool is_free(Mask a) const { return free_[a] != 0; }

    // Unique basis of a closed set.
    Mask basis(Mask closed_set) const;
    std::vector<Mask> free_sets() const;

private:
    ClosureSystem cs_;
    std::vector<char> free_;
};

template <class Acc>
struct FreeSetReduction {
    Acc full{};
    Acc free{};
};

struct FreeSetViolation {
    Mask closed_set = 0;
    Mask basis = 0;
};

// Checks Σ_{A0 ⊆ I ⊆ A} f(I) = 0 for every closed, non-free A.
template <class Acc, class F>
std::optional<FreeSetViolation> check_interval_condition(const ConvexGeometry& cg, F&& f) {
    for (Mask a : cg.closure().closed_sets()) {
        if (cg.is_free(a)) continue;
        const Mask a0 = cg.basis(a);
        const Mask free = a & ~a0;
        Acc sum{};
        Mask s = free;
        while (true) {
            sum += f(a0 | s);
            if (s == 0) break;
            s = (s - 1) & free;
        }
        if (!(sum == Acc{})) return FreeSetViolation{a, a0};
    }
    return std::nullopt;
}

// Σ_{A ⊆ S} f(A) and Σ_{A h-free} f(A); throws if the interval condition fails.
template <class Acc, class F>
FreeSetReduction<Acc> reduce_free_sets(const ConvexGeometry& cg, F&& f, Exec exec = Exec::parallel) {
    if (auto v = check_interval_condition<Acc>(cg, f)) {
        throw PreconditionViolation("interval sum over [A0, A] is nonzero for closed set mask " +
                                    std::to_string(v->closed_set));
    }
    FreeSetReduction<Acc> r;
    r.full = sum_full<Acc>(cg.size(), f, exec, kClosureCap);
    for (Mask a : cg.free_sets()) r.free += f(a);
    return r;
}

// Σ_{A ⊆ S} (-1)^{|h(A)| - |A|}
BigInt count_free_signed(const ConvexGeometry& cg);
// Σ over non-empty free A of (-1)^{|A|-1}
BigInt euler_characteristic_free(const ConvexGeometry& cg);

struct HStarResult {
    ClosureSystem closure;
    std::vector<BrokenCircuit> broken;  // witness c(B) = max of the witness circuit
    bool convex = false;
    bool free_matches_avoiding = false;
};

// h(A) = A ∪ {c(B) : B ∈ ℬ, B ⊆ A}, iterated to its fixpoint h*.
Mask hstar(Mask a, const std::vector<BrokenCircuit>& broken);
HStarResult hstar_from_circuits(int n, const std::vector<Mask>& circuits);

// Generators for test corpora.
ClosureSystem interval_geometry(int n);
ClosureSystem discrete_geometry(int n);
ClosureSystem order_ideal_geometry(const FinitePoset& p);
// Convex hull closure of integer points in the plane.
ClosureSystem planar_point_geometry(const std::vector<std::pair<long, long>>& points);
ClosureSystem random_point_geometry(int n, std::mt19937_64& rng);
FinitePoset random_poset(int n, double density, std::mt19937_64& rng);

}  // namespace bc
