#pragma once

// Subset-sum kernels shared by every engine in the library.
//
// Two implementations live side by side: `serial` is the straightforward
// reference used by the tests, `parallel` splits the search tree with OpenMP.
// Both visit exactly the same subsets, and the parallel reduction combines
// per-chunk partial sums in chunk order, so results are deterministic.
//
// An accumulator type Acc must be default constructible to its zero and
// support `acc += f(A)` as well as `acc += other_acc`.

#include <cstdint>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bc/subset.hpp"

namespace bc {

// Broken sets grouped by their maximum element. `rest[e]` lists B \ {e} for all
// B with max B = e, so "does the current subset complete some B when e is
// added" is one subset test per entry.
class PruneIndex {
public:
    PruneIndex(int n, const std::vector<Mask>& broken) : n_(n), rest_(n) {
        for (Mask b : broken) {
            if (b == 0) {
                has_empty_ = true;
                continue;
            }
            int e = max_element(b);
            if (e >= n) throw PreconditionViolation("broken set outside the ground set");
            rest_[e].push_back(b & ~bit(e));
        }
    }

    int size() const { return n_; }
    bool has_empty() const { return has_empty_; }

    // True if adding element e to `current` would contain some broken set.
    bool forbids(Mask current, int e) const {
        for (Mask r : rest_[e]) {
            if (is_subset(r, current)) return true;
        }
        return false;
    }

private:
    int n_;
    bool has_empty_ = false;
    std::vector<std::vector<Mask>> rest_;
};

namespace serial {

template <class Acc, class F>
Acc sum_full(int n, F&& f) {
    Acc acc{};
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < total; ++a) acc += f(static_cast<Mask>(a));
    return acc;
}

// Depth-first walk over all subsets avoiding every broken set, elements added
// in increasing order. Calls visit(A) once per surviving subset.
template <class Visit>
void for_each_avoiding(const PruneIndex& index, Visit&& visit) {
    if (index.has_empty()) return;
    const int n = index.size();
    auto rec = [&](auto&& self, int e, Mask current) -> void {
        if (e == n) {
            visit(current);
            return;
        }
        self(self, e + 1, current);
        if (!index.forbids(current, e)) self(self, e + 1, current | bit(e));
    };
    rec(rec, 0, Mask{0});
}

template <class Acc, class F>
Acc sum_pruned(const PruneIndex& index, F&& f) {
    Acc acc{};
    for_each_avoiding(index, [&](Mask a) { acc += f(a); });
    return acc;
}

}  // namespace serial

namespace parallel {

namespace detail {

inline int split_depth(int n) {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    // A few chunks per thread, but never more than the tree has levels.
    int depth = 0;
    while ((1 << depth) < 8 * threads && depth < 12) ++depth;
    return depth < n ? depth : n;
}

template <class Body>
void run_chunks(std::int64_t chunks, Body&& body) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
        try {
            body(c);
        } catch (...) {
#pragma omp critical(bc_kernel_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

template <class Acc, class F>
Acc sum_full(int n, F&& f) {
    const int depth = detail::split_depth(n);
    const std::int64_t chunks = std::int64_t{1} << depth;
    const int low = n - depth;
    const std::uint64_t per_chunk = std::uint64_t{1} << low;
    std::vector<Acc> partial(chunks);
    detail::run_chunks(chunks, [&](std::int64_t c) {
        Acc acc{};
        const std::uint64_t base = static_cast<std::uint64_t>(c) << low;
        for (std::uint64_t a = 0; a < per_chunk; ++a) acc += f(static_cast<Mask>(base | a));
        partial[c] = std::move(acc);
    });
    Acc total{};
    for (auto& p : partial) total += p;
    return total;
}

// Splits the pruned search tree on the decisions for the first `depth`
// elements; every prefix that survives pruning becomes one independent task.
template <class Acc, class Visit>
Acc reduce_avoiding(const PruneIndex& index, Visit&& visit) {
    Acc total{};
    if (index.has_empty()) return total;
    const int n = index.size();
    const int depth = detail::split_depth(n);

    std::vector<Mask> prefixes;
    auto grow = [&](auto&& self, int e, Mask current) -> void {
        if (e == depth) {
            prefixes.push_back(current);
            return;
        }
        self(self, e + 1, current);
        if (!index.forbids(current, e)) self(self, e + 1, current | bit(e));
    };
    grow(grow, 0, Mask{0});

    std::vector<Acc> partial(prefixes.size());
    detail::run_chunks(static_cast<std::int64_t>(prefixes.size()), [&](std::int64_t c) {
        Acc acc{};
        auto rec = [&](auto&& self, int e, Mask current) -> void {
            if (e == n) {
                visit(acc, current);
                return;
            }
            self(self, e + 1, current);
            if (!index.forbids(current, e)) self(self, e + 1, current | bit(e));
        };
        rec(rec, depth, prefixes[c]);
        partial[c] = std::move(acc);
    });
    for (auto& p : partial) total += p;
    return total;
}

template <class Acc, class F>
Acc sum_pruned(const PruneIndex& index, F&& f) {
    return reduce_avoiding<Acc>(index, [&](Acc& acc, Mask a) { acc += f(a); });
}

}  // namespace parallel

}  // namespace bc
