#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace bc {

using BigInt = mpz_class;
using Rational = mpq_class;

// An additively written abelian group whose default-constructed value is zero.
template <class G>
concept AbelianGroup = std::default_initializable<G> && std::copyable<G> &&
                       requires(G a, const G& b) {
                           { a += b };
                           { a -= b };
                           { a + b } -> std::convertible_to<G>;
                           { -a } -> std::convertible_to<G>;
                           { a == b } -> std::convertible_to<bool>;
                       };

// A single signed term c * x^exp. Set functions of the form (-1)^|A| x^k return
// these so the engines can accumulate without building a polynomial per subset.
struct IntTerm {
    long coeff = 0;
    unsigned exp = 0;
};

// Dense univariate polynomial over the integers; coeffs[i] is the coefficient
// of x^i. The zero polynomial has no stored coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, unsigned exp);
    // (x + a)^n
    static IntPolynomial binomial_power(long a, unsigned n);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator+=(const IntTerm& t);
    IntPolynomial operator-() const;
    IntPolynomial scaled(const BigInt& c) const;

    // p(x + a), by repeated synthetic division.
    IntPolynomial shifted(const BigInt& a) const;

    BigInt eval(const BigInt& at) const;
    BigInt derivative_eval(const BigInt& at) const;
    double eval(double at) const;

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

struct BiTerm {
    long coeff = 0;
    unsigned x_exp = 0;
    unsigned y_exp = 0;
};

// Sparse bivariate integer polynomial, (i, j) -> coefficient of x^i y^j.
// No zero coefficient is ever stored.
class BiPolynomial {
public:
    using Key = std::pair<unsigned, unsigned>;

    BiPolynomial() = default;

    const std::map<Key, BigInt>& terms() const { return terms_; }
    BigInt coeff(unsigned i, unsigned j) const;
    bool is_zero() const { return terms_.empty(); }

    BiPolynomial& operator+=(const BiPolynomial& o);
    BiPolynomial& operator-=(const BiPolynomial& o);
    BiPolynomial& operator+=(const BiTerm& t);
    BiPolynomial operator-() const;
    void add_term(unsigned i, unsigned j, const BigInt& c) { add({i, j}, c); }

    // Substitutes x := at and returns the remaining polynomial in y.
    IntPolynomial eval_x(const BigInt& at) const;

    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void add(const Key& k, const BigInt& c);
    std::map<Key, BigInt> terms_;
};

static_assert(AbelianGroup<BigInt>);
static_assert(AbelianGroup<IntPolynomial>);
static_assert(AbelianGroup<BiPolynomial>);
static_assert(AbelianGroup<double>);

BigInt binomial(unsigned n, unsigned k);

std::string rational_string(const Rational& q);

// {"var":"x","coeffs":["c0","c1",...]}
nlohmann::json to_json(const IntPolynomial& p, const std::string& var = "x");
IntPolynomial int_polynomial_from_json(const nlohmann::json& j);
// {"vars":["x","y"],"terms":[[i,j,"c"],...]}
nlohmann::json to_json(const BiPolynomial& p);
BiPolynomial bi_polynomial_from_json(const nlohmann::json& j);

}  // namespace bc
