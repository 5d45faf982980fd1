#pragma once

#include <optional>
#include <vector>

#include "projsym/rational.hpp"

namespace projsym {

// Element of Q[lambda]: dense coefficient list, no trailing zeros.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& c) { if (c != 0) coeffs_.push_back(c); }
    Scalar(long long c) : Scalar(Rational(c)) {}
    explicit Scalar(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Scalar lambda();                       // the generator
    static Scalar monomial(const Rational& c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Rational coeff(int power) const;
    Rational constant_value() const;              // requires is_constant()

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Rational eval(const Rational& value) const;   // substitution hom Q[l] -> Q
    Scalar substitute(const Scalar& value) const; // p(value), e.g. lambda -> 1-lambda

    // Exact division; nullopt when the remainder is nonzero.
    std::optional<Scalar> divide_exact(const Scalar& d) const;
    bool divisible_by(const Scalar& d) const { return divide_exact(d).has_value(); }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// prod_{j=0}^{m-1}(t - j) / m!  — binomial with polynomial upper argument.
Scalar binom_poly(const Scalar& t, int m);

// Bernoulli polynomial B_s in the variable lambda.
Scalar bernoulli(int s);

} // namespace projsym
