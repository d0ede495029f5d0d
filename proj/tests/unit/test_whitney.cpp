#include "doctest.h"

#include <random>

#include "bc/graph.hpp"
#include "bc/whitney.hpp"

using namespace bc;

namespace {
const Mask a = bit(0), b = bit(1), c = bit(2), d = bit(3);
auto alternating = [](Mask m) { return BigInt(parity_sign(m)); };
}  // namespace

TEST_SUITE("whitney-core") {

TEST_CASE("derive_broken_circuits") {
    auto bc1 = derive_broken_circuits({a | b | c}, 3);
    REQUIRE(bc1.size() == 1);
    CHECK(bc1[0].broken == (a | b));
    CHECK(bc1[0].witness == (a | b | c));

    auto bc2 = broken_sets(derive_broken_circuits({a, a | b}, 2));
    CHECK(bc2 == std::vector<Mask>{0, a});

    Graph k3 = complete_graph(3);
    auto bc3 = derive_broken_circuits(cycles_edge_sets(k3), 3);
    REQUIRE(bc3.size() == 1);
    CHECK(bc3[0].broken == (bit(0) | bit(1)));

    CHECK_THROWS_AS(derive_broken_circuits({bit(5)}, 3), PreconditionViolation);
    CHECK_THROWS_AS(derive_broken_circuits({0}, 3), PreconditionViolation);
}

TEST_CASE("dedup keeps the first witness") {
    auto bcs = derive_broken_circuits({a | b | d, a | b | c}, 4);
    REQUIRE(bcs.size() == 1);
    CHECK(bcs[0].witness == (a | b | d));
    auto same = derive_broken_circuits({a | c, b | c, a | c}, 3);
    CHECK(same.size() == 2);
}

TEST_CASE("verify_cancellation") {
    Graph k3 = complete_graph(3);
    auto term = [&](Mask m) {
        IntPolynomial p;
        p += chromatic_term(k3)(m);
        return p;
    };
    CHECK(verify_cancellation<IntPolynomial>(3, cycles_edge_sets(k3), term).ok);
    CHECK(verify_cancellation<BigInt>(3, {a | c}, alternating).ok);
    auto r = verify_cancellation<BigInt>(2, {a | b}, [](Mask) { return BigInt(1); });
    CHECK_FALSE(r.ok);
    CHECK(r.subset == (a | b));
    CHECK_THROWS_AS(verify_cancellation<BigInt>(19, {a}, alternating), CapExceeded);
}

TEST_CASE("sum_full") {
    Graph k3 = complete_graph(3);
    CHECK(sum_full<IntPolynomial>(3, chromatic_term(k3)) == IntPolynomial{0, 2, -3, 1});
    CHECK(sum_full<BigInt>(0, [](Mask) { return BigInt(42); }) == 42);
    for (int n = 1; n <= 10; ++n) CHECK(sum_full<BigInt>(n, alternating) == 0);
    CHECK_THROWS_AS(sum_full<BigInt>(25, alternating), CapExceeded);
}

TEST_CASE("sum_pruned") {
    Graph k3 = complete_graph(3);
    CHECK(sum_pruned<IntPolynomial>(3, {a | b}, chromatic_term(k3)) == IntPolynomial{0, 2, -3, 1});
    auto g = [](Mask m) { return BigInt(m * m + 3); };
    CHECK(sum_pruned<BigInt>(5, {}, g) == sum_full<BigInt>(5, g));
    CHECK(sum_pruned<BigInt>(5, {0}, g) == 0);
}

TEST_CASE("serial and parallel kernels agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 16)(rng);
        std::vector<Mask> broken;
        for (int i = 0; i < 4; ++i) broken.push_back(static_cast<Mask>(rng()) & full_mask(n));
        std::erase(broken, Mask{0});
        auto f = [](Mask m) { return BigInt(static_cast<long>(m % 97) - 40); };
        CHECK(sum_full<BigInt>(n, f, Exec::serial) == sum_full<BigInt>(n, f, Exec::parallel));
        CHECK(sum_pruned<BigInt>(n, broken, f, Exec::serial) == sum_pruned<BigInt>(n, broken, f, Exec::parallel));
        CHECK(enumerate_avoiding(n, broken, Exec::serial) == enumerate_avoiding(n, broken, Exec::parallel));
    }
}

TEST_CASE("enumerate_avoiding") {
    CHECK(enumerate_avoiding(3, {a | b}) == std::vector<std::uint64_t>{1, 3, 2, 0});
    CHECK(enumerate_avoiding(4, {}) == std::vector<std::uint64_t>{1, 4, 6, 4, 1});
    CHECK(enumerate_avoiding(3, {a, b, c}) == std::vector<std::uint64_t>{1, 0, 0, 0});
}

TEST_CASE("monotone pruning soundness") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        std::vector<Mask> b1, b2;
        for (int i = 0; i < 3; ++i) {
            b1.push_back((static_cast<Mask>(rng()) & full_mask(n)) | 1);
            b2.push_back((static_cast<Mask>(rng()) & full_mask(n)) | 2);
        }
        auto both = b1;
        both.insert(both.end(), b2.begin(), b2.end());
        auto one = enumerate_avoiding(n, b1), union_counts = enumerate_avoiding(n, both);
        for (std::size_t k = 0; k < one.size(); ++k) CHECK(union_counts[k] <= one[k]);
    }
}

TEST_CASE("for_each_avoiding visits exactly the avoiding subsets") {
    std::vector<Mask> seen;
    for_each_avoiding(3, {a | b}, [&](Mask m) { seen.push_back(m); });
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<Mask>{0, 1, 2, 4, 5, 6});
}

TEST_CASE("sum_over_maxima") {
    auto f = [](Mask m) { return BigInt(parity_sign(m) * (1 + popcount(m))); };
    // Antichain: every element maximal.
    auto anti = sum_over_maxima<BigInt>(FinitePoset::antichain(4), f);
    CHECK(anti.restricted == *anti.full);
    // Chain 0<1<2 with f(A) = (-1)^|A| g(min A): sum over {∅, {top}}.
    auto g = [](Mask m) { return BigInt(parity_sign(m) * (m ? 10 + min_element(m) : 1)); };
    auto ch = sum_over_maxima<BigInt>(FinitePoset::chain(3), g);
    CHECK(ch.condition_verified);
    CHECK(ch.restricted == 1 - 12);
    CHECK(*ch.full == ch.restricted);
}

TEST_CASE("sum_over_maxima rejects a failing cancellation") {
    CHECK_THROWS_AS(sum_over_maxima<BigInt>(FinitePoset::chain(3), [](Mask) { return BigInt(1); }),
                    PreconditionViolation);
}

TEST_CASE("sum_over_chains") {
    auto f = [](Mask m) { return BigInt(parity_sign(m)); };
    auto ch = sum_over_chains<BigInt>(FinitePoset::chain(4), f);
    CHECK(ch.restricted == *ch.full);
    // Vee: s=0, t=1 incomparable, join 2. f(A) = (-1)^|A| g(lcm-like join of A).
    FinitePoset vee = FinitePoset::from_less_pairs(3, {{0, 2}, {1, 2}});
    auto join_of = [&](Mask m) {
        if (m == 0) return -1;
        if (popcount(m) == 1) return min_element(m);
        return 2;
    };
    auto h = [&](Mask m) { return BigInt(parity_sign(m) * (5 + 3 * join_of(m))); };
    auto r = sum_over_chains<BigInt>(vee, h);
    CHECK(r.condition_verified);
    CHECK(r.restricted == *r.full);
    CHECK_THROWS_AS(sum_over_chains<BigInt>(FinitePoset::antichain(2), f), PreconditionViolation);
}

TEST_CASE("poset utilities") {
    FinitePoset p = FinitePoset::from_less_pairs(4, {{0, 1}, {1, 2}});
    CHECK(p.leq(0, 2));
    CHECK(p.maximal() == (bit(2) | bit(3)));
    CHECK(p.linear_extension() == std::vector<int>{0, 1, 2, 3});
    CHECK(p.dual().leq(2, 0));
    CHECK(p.is_chain(bit(0) | bit(2)));
    CHECK_FALSE(p.is_chain(bit(0) | bit(3)));
    CHECK_THROWS(FinitePoset::from_less_pairs(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("maxmin_identity") {
    auto r1 = maxmin_identity<BigInt>({1, 2}, 1);
    CHECK(r1.lhs == 2);
    CHECK(r1.rhs == 2);
    auto r2 = maxmin_identity<BigInt>({3, 1, 2}, 2);
    CHECK(r2.lhs == 6);
    CHECK(r2.rhs == 6);
    CHECK(r2.pruned == 6);
    auto r3 = maxmin_identity<BigInt>({4, 4, 4, 4}, 3);
    CHECK(r3.lhs == 3 * 4);
    CHECK_THROWS_AS(maxmin_identity<BigInt>({1, 2}, 3), PreconditionViolation);
    CHECK_THROWS_AS(maxmin_identity<BigInt>({1, 2}, 0), PreconditionViolation);
}

TEST_CASE("maxmin_identity property, permutation invariant") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 8)(rng);
        std::vector<BigInt> v(n);
        for (auto& x : v) x = std::uniform_int_distribution<long>(-20, 20)(rng);
        int k = std::uniform_int_distribution<int>(1, n)(rng);
        auto r = maxmin_identity<BigInt>(v, k);
        CHECK(r.lhs == r.rhs);
        CHECK(r.pruned == r.rhs);
        std::shuffle(v.begin(), v.end(), rng);
        auto s = maxmin_identity<BigInt>(v, k);
        CHECK(s.lhs == r.lhs);
        CHECK(s.rhs == r.rhs);
    }
}

TEST_CASE("restricted_union_size") {
    IndexedSetFamily fam({{1, 2}, {2, 3}, {2}});
    auto r = restricted_union_size(fam, {{a | b, 2}});
    CHECK(r.restricted == 3);
    CHECK(r.direct == 3);
    auto classical = restricted_union_size(fam, {});
    CHECK(classical.restricted == 3);
    // Witness must be larger than max B and contain the intersection.
    CHECK_THROWS_AS(restricted_union_size(fam, {{a | c, 1}}), PreconditionViolation);
    CHECK_THROWS_AS(restricted_union_size(IndexedSetFamily({{1, 2}, {2, 3}, {3}}), {{a | b, 2}}),
                    PreconditionViolation);
}

TEST_CASE("restricted_union_size with equal sets and pair witnesses") {
    IndexedSetFamily fam({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
    std::vector<WitnessedBroken> broken;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (j + 1 < 4) broken.push_back({bit(i) | bit(j), j + 1});
    auto r = restricted_union_size(fam, broken);
    CHECK(r.restricted == 3);
    CHECK(r.direct == 3);
}

TEST_CASE("narushima_union") {
    // Chain with nested sets M_0 ⊆ M_1 ⊆ M_2.
    auto chain = narushima_union(FinitePoset::chain(3), IndexedSetFamily({{1}, {1, 2}, {1, 2, 3}}));
    CHECK(chain.restricted == 3);
    FinitePoset vee = FinitePoset::from_less_pairs(3, {{0, 2}, {1, 2}});
    auto v = narushima_union(vee, IndexedSetFamily({{1, 2}, {2, 3, 4}, {2, 7}}));
    CHECK(v.restricted == v.direct);
    CHECK(v.direct == 5);
    auto one = narushima_union(FinitePoset::chain(1), IndexedSetFamily({{4, 5, 6}}));
    CHECK(one.restricted == 3);
    CHECK_THROWS_AS(narushima_union(vee, IndexedSetFamily({{1, 2}, {2, 3}, {7}})), PreconditionViolation);
}

TEST_CASE("broken subfamily provenance") {
    std::vector<Mask> circuits{a | b | c, b | d};
    CHECK(is_broken_subfamily({a | b, b}, circuits));
    CHECK_FALSE(is_broken_subfamily({a | c}, circuits));
}

}
