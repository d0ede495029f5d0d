#include "bc/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "bc/error.hpp"

namespace bc {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, unsigned exp) {
    std::vector<BigInt> v(exp + 1);
    v[exp] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::binomial_power(long a, unsigned n) {
    std::vector<BigInt> v(n + 1);
    BigInt apow = 1;
    for (unsigned k = 0; k <= n; ++k) {
        // coefficient of x^(n-k) is C(n,k) a^k
        v[n - k] = binomial(n, k) * apow;
        apow *= a;
    }
    return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator+=(const IntTerm& t) {
    if (t.coeff == 0) return *this;
    if (t.exp >= coeffs_.size()) coeffs_.resize(t.exp + 1);
    coeffs_[t.exp] += t.coeff;
    if (t.exp + 1 == coeffs_.size()) normalize();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial IntPolynomial::scaled(const BigInt& c) const {
    IntPolynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.normalize();
    return r;
}

IntPolynomial IntPolynomial::shifted(const BigInt& a) const {
    std::vector<BigInt> c = coeffs_;
    const std::size_t n = c.size();
    // Taylor shift: after pass k, c[k] holds the k-th coefficient of p(x + a).
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = n - 1; i > k; --i) c[i - 1] += a * c[i];
    }
    return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::eval(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

BigInt IntPolynomial::derivative_eval(const BigInt& at) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 1;) acc = acc * at + coeffs_[i] * static_cast<unsigned long>(i);
    return acc;
}

double IntPolynomial::eval(double at) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
    return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag.get_str();
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

BigInt BiPolynomial::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPolynomial::add(const Key& k, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

BiPolynomial& BiPolynomial::operator+=(const BiTerm& t) {
    add({t.x_exp, t.y_exp}, BigInt(t.coeff));
    return *this;
}

BiPolynomial BiPolynomial::operator-() const {
    BiPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

IntPolynomial BiPolynomial::eval_x(const BigInt& at) const {
    unsigned max_y = 0;
    for (const auto& [k, c] : terms_) max_y = std::max(max_y, k.second);
    std::vector<BigInt> out(terms_.empty() ? 0 : max_y + 1);
    for (const auto& [k, c] : terms_) {
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), at.get_mpz_t(), k.first);
        out[k.second] += c * p;
    }
    return IntPolynomial(std::move(out));
}

std::string BiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || mag != 1) os << mag.get_str();
        if (has_var && mag != 1) os << "*";
        if (k.first > 0) os << "x" << (k.first > 1 ? "^" + std::to_string(k.first) : "");
        if (k.first > 0 && k.second > 0) os << "*";
        if (k.second > 0) os << "y" << (k.second > 1 ? "^" + std::to_string(k.second) : "");
    }
    return os.str();
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::string rational_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

BigInt parse_big(const nlohmann::json& j) {
    if (j.is_string()) {
        BigInt v;
        if (v.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("invalid integer literal: " + j.dump());
        return v;
    }
    if (j.is_number_integer()) return BigInt(j.get<long>());
    throw SchemaError("expected decimal string coefficient, got " + j.dump());
}

}  // namespace

nlohmann::json to_json(const IntPolynomial& p, const std::string& var) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return {{"var", var}, {"coeffs", coeffs}};
}

IntPolynomial int_polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw SchemaError("polynomial JSON needs a \"coeffs\" array");
    std::vector<BigInt> c;
    for (const auto& e : j["coeffs"]) c.push_back(parse_big(e));
    return IntPolynomial(std::move(c));
}

nlohmann::json to_json(const BiPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : p.terms()) terms.push_back({k.first, k.second, c.get_str()});
    return {{"vars", {"x", "y"}}, {"terms", terms}};
}

BiPolynomial bi_polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw SchemaError("bivariate polynomial JSON needs a \"terms\" array");
    BiPolynomial p;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 3) throw SchemaError("term must be [i,j,c]");
        p.add_term(t[0].get<unsigned>(), t[1].get<unsigned>(), parse_big(t[2]));
    }
    return p;
}

}  // namespace bc
