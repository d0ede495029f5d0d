#include "doctest.h"

#include <cmath>

#include "bc/number.hpp"

using namespace bc;

TEST_SUITE("number-theory") {

TEST_CASE("classical_mobius") {
    CHECK(classical_mobius(30) == -1);
    CHECK(classical_mobius(12) == 0);
    CHECK(classical_mobius(1) == 1);
    CHECK_THROWS(classical_mobius(0));
}

TEST_CASE("factorization helpers") {
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(prime_factors(60) == std::vector<std::uint64_t>{2, 3, 5});
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK(is_squarefree(30));
    CHECK_FALSE(is_squarefree(18));
    CHECK(primes_up_to(13).size() == 6);
    CHECK_THROWS_AS(factorize(1000001), CapExceeded);
}

TEST_CASE("gcd_expansion") {
    CHECK(gcd_expansion(30, GcdVariant::eq12).value == -1);
    CHECK(gcd_expansion(12, GcdVariant::eq19).value == 0);
    CHECK(gcd_expansion(4, GcdVariant::eq12, true).value == 0);
    CHECK_THROWS_AS(gcd_expansion(7, GcdVariant::eq12), PreconditionViolation);
    CHECK(gcd_expansion(7, GcdVariant::eq12, true).value == -1);
    CHECK(gcd_expansion(7, GcdVariant::eq19, true).value == -1);
    CHECK_THROWS_AS(gcd_expansion(1, GcdVariant::eq12), PreconditionViolation);
    // d(720720) = 240 exceeds the subset cap.
    CHECK_THROWS_AS(gcd_expansion(720720, GcdVariant::eq12), CapExceeded);
}

TEST_CASE("gcd/lcm expansions and their chains equal mu on non-primes <= 200") {
    for (std::uint64_t n = 2; n <= 200; ++n) {
        if (is_prime(n) || divisors(n).size() > 22) continue;
        int mu = classical_mobius(n);
        for (auto v : {GcdVariant::eq12, GcdVariant::eq19}) {
            auto r = gcd_expansion(n, v);
            CHECK(r.value == mu);
            CHECK(r.reduced == mu);
            for (const auto& c : r.chain) CHECK(c == mu);
        }
        CHECK(gcd_expansion(n, GcdVariant::eq12, false, Exec::serial).value == mu);
    }
}

TEST_CASE("multiplicative functions") {
    auto id = MultiplicativeFunction::parse("identity");
    CHECK(id(12) == 12);
    CHECK(MultiplicativeFunction::parse("power:-1")(4) == Rational(1, 4));
    CHECK(MultiplicativeFunction::parse("liouville")(12) == -1);
    CHECK(MultiplicativeFunction::parse("mobius")(6) == 1);
    CHECK(MultiplicativeFunction::parse("totient")(12) == 4);
    CHECK_THROWS_AS(MultiplicativeFunction::parse("banana"), SchemaError);
    for (auto name : {"identity", "power:2", "liouville", "mobius", "totient"}) {
        auto h = MultiplicativeFunction::parse(name);
        CHECK(h(1) == 1);
        for (std::uint64_t a = 1; a <= 30; ++a)
            for (std::uint64_t b = 1; b <= 30; ++b)
                if (gcd_u(a, b) == 1) CHECK(h(a * b) == h(a) * h(b));
    }
}

TEST_CASE("totient_h") {
    auto id = MultiplicativeFunction::parse("identity");
    for (auto m : {TotientMethod::product, TotientMethod::divisor_sum, TotientMethod::subset_sum}) {
        CHECK(totient_h(12, id, m) == 4);
        CHECK(totient_h(30, id, m) == 8);
        CHECK(totient_h(1, id, m) == 1);
    }
    // Not squarefree and μ is not completely multiplicative.
    CHECK_THROWS_AS(totient_h(12, MultiplicativeFunction::parse("totient"), TotientMethod::product), PreconditionViolation);
    CHECK_THROWS_AS(totient_h(12, MultiplicativeFunction::parse("mobius"), TotientMethod::product), PreconditionViolation);
    // μ is not completely multiplicative but 6 is squarefree.
    CHECK(totient_h(6, MultiplicativeFunction::parse("mobius"), TotientMethod::product) == 4);
}

TEST_CASE("totient methods agree") {
    auto id = MultiplicativeFunction::parse("identity");
    for (std::uint64_t n = 1; n <= 500; ++n) {
        Rational p = totient_h(n, id, TotientMethod::product);
        CHECK(totient_h(n, id, TotientMethod::divisor_sum) == p);
        if (divisors(n).size() <= 16) CHECK(totient_h(n, id, TotientMethod::subset_sum) == p);
        CHECK(totient_product_identity(n, id));
    }
    auto sq = MultiplicativeFunction::power(2);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        Rational p = totient_h(n, sq, TotientMethod::product);
        CHECK(totient_h(n, sq, TotientMethod::divisor_sum) == p);
        if (divisors(n).size() <= 16) CHECK(totient_h(n, sq, TotientMethod::subset_sum) == p);
    }
}

TEST_CASE("dirichlet_inverse_totient") {
    auto id = MultiplicativeFunction::parse("identity");
    for (auto m : {TotientMethod::product, TotientMethod::divisor_sum, TotientMethod::subset_sum}) {
        CHECK(dirichlet_inverse_totient(6, id, m) == 2);
        CHECK(dirichlet_inverse_totient(1, id, m) == 1);
        CHECK(dirichlet_inverse_totient(4, id, m) == -1);
    }
    // No restriction on h: μ has h(p) = 0 but works here.
    auto mu = MultiplicativeFunction::parse("mobius");
    CHECK(dirichlet_inverse_totient(30, mu, TotientMethod::product) == 8);
    CHECK(dirichlet_inverse_totient(30, mu, TotientMethod::subset_sum) == 8);
}

TEST_CASE("non-squarefree restrictions leave the value unchanged") {
    auto id = MultiplicativeFunction::parse("identity");
    auto cube = MultiplicativeFunction::power(3);
    for (std::uint64_t n = 4; n <= 200; ++n) {
        if (is_squarefree(n) || divisors(n).size() > 16) continue;
        CHECK(totient_subset_sum_gcd_gt1(n, id) == totient_h(n, id, TotientMethod::product));
        CHECK(totient_subset_sum_gcd_gt1(n, cube) == totient_h(n, cube, TotientMethod::product));
        CHECK(dirichlet_subset_sum_lcm_lt_n(n, id) == dirichlet_inverse_totient(n, id, TotientMethod::product));
    }
}

TEST_CASE("chain identities") {
    auto id = MultiplicativeFunction::parse("identity");
    for (std::uint64_t n : {2ull, 6ull, 12ull, 30ull, 36ull, 60ull}) {
        auto c = chain_identities(n, id);
        CHECK(c.totient_chain == id(n) - totient_h(n, id, TotientMethod::product));
        CHECK(c.dirichlet_chain == dirichlet_inverse_totient(n, id, TotientMethod::product));
        REQUIRE(c.totient_inner.size() == c.divisors.size());
        REQUIRE(c.dirichlet_inner.size() == c.divisors.size());
        for (std::size_t i = 0; i < c.divisors.size(); ++i) {
            std::uint64_t d = c.divisors[i];
            if (d < n) CHECK(c.totient_inner[i] == -classical_mobius(n / d));
            if (d > 1) CHECK(c.dirichlet_inner[i] == classical_mobius(d));
        }
    }
}

TEST_CASE("zeta_reciprocal") {
    CHECK(zeta_reciprocal(2, 13).value == doctest::Approx(0.618078425071).epsilon(1e-10));
    CHECK(zeta_reciprocal(2, 2).value == doctest::Approx(0.75));
    auto big = zeta_reciprocal(2, 10000);
    CHECK(std::abs(big.value - 6 / (M_PI * M_PI)) < 5e-5);
    CHECK(big.value >= big.reference);
    double prev = 1;
    for (std::uint64_t b = 2; b <= 2000; b += 37) {
        double v = zeta_reciprocal(2, b).value;
        CHECK(v <= prev);
        CHECK(v >= 6 / (M_PI * M_PI));
        prev = v;
    }
    CHECK_THROWS_AS(zeta_reciprocal(1.0, 10), PreconditionViolation);
    CHECK_THROWS_AS(zeta_reciprocal(2, 1), PreconditionViolation);
}

TEST_CASE("zeta subset surrogate") {
    for (std::uint64_t bound : {2ull, 3ull, 5ull, 7ull})
        for (long s : {1L, 2L, 3L}) {
            auto z = zeta_subset_surrogate(bound, s);
            CHECK(z.subset_form == z.product);
        }
    CHECK_THROWS_AS(zeta_subset_surrogate(11, 2), CapExceeded);
}

TEST_CASE("primorial") {
    CHECK(primorial(10) == 210);
    CHECK(primorial(1) == 1);
    CHECK(primorial(2) == 2);
    CHECK(primorial(0) == 1);
}

TEST_CASE("complexes") {
    auto s12 = build_complex(12, ComplexKind::S);
    auto t12 = build_complex(12, ComplexKind::T);
    CHECK(s12.downward_closed());
    CHECK(s12.euler_characteristic() == 1);
    CHECK(t12.euler_characteristic() == 1);
    CHECK(complexes_isomorphic_by_star(12));
    CHECK(bonferroni_check(s12, 1));
    CHECK(bonferroni_check(s12));
    CHECK(bonferroni_check(t12));
    auto s4 = build_complex(4, ComplexKind::S);
    CHECK(s4.faces == std::vector<Mask>{bit(0)});
    CHECK(s4.euler_characteristic() == 1);
}

TEST_CASE("complexes for non-squarefree n <= 200") {
    for (std::uint64_t n = 4; n <= 200; ++n) {
        if (is_squarefree(n) || divisors(n).size() > 22) continue;
        auto s = build_complex(n, ComplexKind::S), t = build_complex(n, ComplexKind::T);
        CHECK(s.euler_characteristic() == 1);
        CHECK(t.euler_characteristic() == 1);
        CHECK(bonferroni_check(s));
        CHECK(bonferroni_check(t));
        CHECK(complexes_isomorphic_by_star(n));
    }
}

}
