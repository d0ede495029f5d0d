#include "doctest.h"

#include <random>

#include "bc/algebra.hpp"

using namespace bc;

TEST_SUITE("algebra") {

TEST_CASE("poly_add") {
    CHECK((IntPolynomial{0, 0, 1} + IntPolynomial{0, 0, -1}).is_zero());
    CHECK(IntPolynomial{-1, 1} + IntPolynomial{1, 1} == IntPolynomial{0, 2});
    CHECK(IntPolynomial{0, 2, -3, 1} + IntPolynomial{0, 0, 3} == IntPolynomial{0, 2, 0, 1});
}

TEST_CASE("normalized leading coefficient") {
    IntPolynomial p{1, 2, 3};
    p += IntPolynomial{0, 0, -3};
    CHECK(p.degree() == 1);
    CHECK(p.coeffs().back() != 0);
}

TEST_CASE("poly_eval") {
    IntPolynomial k3{0, 2, -3, 1};
    CHECK(k3.eval(BigInt(3)) == 6);
    CHECK(IntPolynomial{7, 4, 9}.eval(BigInt(0)) == 7);
    CHECK(IntPolynomial{2, -3, 1}.eval(BigInt(1)) == 0);
}

TEST_CASE("poly_derivative_eval") {
    CHECK(IntPolynomial{2, -3, 1}.derivative_eval(BigInt(1)) == -1);
    CHECK(IntPolynomial{5}.derivative_eval(BigInt(17)) == 0);
    CHECK(IntPolynomial{0, 0, 0, 1}.derivative_eval(BigInt(1)) == 3);
}

TEST_CASE("shift and binomial power") {
    // (x+1)^3 shifted by -1 is x^3.
    CHECK(IntPolynomial::binomial_power(1, 3).shifted(BigInt(-1)) == IntPolynomial{0, 0, 0, 1});
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
}

TEST_CASE("group axioms and evaluation homomorphism on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-50, 50);
    auto rand_poly = [&] {
        std::vector<BigInt> v(std::uniform_int_distribution<int>(0, 6)(rng));
        for (auto& x : v) x = c(rng);
        return IntPolynomial(v);
    };
    for (int i = 0; i < 200; ++i) {
        auto p = rand_poly(), q = rand_poly(), r = rand_poly();
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p + (-p)).is_zero());
        CHECK(p + IntPolynomial{} == p);
        BigInt t = c(rng);
        CHECK((p + q).eval(t) == p.eval(t) + q.eval(t));
    }
    for (int i = 0; i < 100; ++i) {
        BiPolynomial a, b, d;
        for (int k = 0; k < 4; ++k) {
            a.add_term(k, k % 2, c(rng));
            b.add_term(k % 3, k, c(rng));
            d.add_term(k, 1, c(rng));
        }
        CHECK((a + b) + d == a + (b + d));
        CHECK(a + b == b + a);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("bivariate keeps no zeros") {
    BiPolynomial a;
    a.add_term(1, 1, 3);
    a.add_term(1, 1, -3);
    CHECK(a.is_zero());
    CHECK(a.terms().empty());
}

TEST_CASE("json round trip") {
    IntPolynomial p{0, 2, -3, 1};
    auto j = to_json(p);
    CHECK(j["var"] == "x");
    CHECK(j["coeffs"][1] == "2");
    CHECK(int_polynomial_from_json(j) == p);
    BiPolynomial q;
    q.add_term(0, 0, 1);
    q.add_term(3, 1, BigInt("123456789012345678901234567890"));
    CHECK(bi_polynomial_from_json(to_json(q)) == q);
}

TEST_CASE("rational strings") {
    CHECK(rational_string(Rational(3, 6)) == "1/2");
    CHECK(rational_string(Rational(4)) == "4");
    CHECK(rational_string(Rational(-2, 3)) == "-2/3");
}

}
