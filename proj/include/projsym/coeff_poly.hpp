#pragma once

#include <map>
#include <string>

#include "projsym/multi_index.hpp"
#include "projsym/scalar.hpp"

namespace projsym {

// Polynomial in x^1..x^n with Scalar (= Q[lambda]) coefficients.
// Sparse map keyed by exponent multi-index; zero entries are pruned.
class CoeffPoly {
public:
    CoeffPoly() = default;
    explicit CoeffPoly(int n) : n_(n) {}
    CoeffPoly(int n, const Scalar& c);
    static CoeffPoly variable(int n, int axis);   // x^{axis}, 1-based axis
    static CoeffPoly monomial(int n, const MultiIndex& m, const Scalar& c);

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;                     // max |alpha|, -1 for zero
    int lambda_degree() const;                    // max over coefficients
    bool lambda_free() const { return lambda_degree() <= 0; }
    const std::map<MultiIndex, Scalar>& terms() const { return terms_; }
    Scalar coeff(const MultiIndex& m) const;
    Scalar constant_term() const { return coeff(MultiIndex(n_)); }

    void add_term(const MultiIndex& m, const Scalar& c);

    CoeffPoly operator-() const;
    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    CoeffPoly scaled(const Scalar& c) const;
    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b)
    { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const CoeffPoly& a, const CoeffPoly& b) { return !(a == b); }

    CoeffPoly differentiate(int axis) const;      // d/dx^axis, 1-based
    CoeffPoly derivative(const MultiIndex& m) const;

    CoeffPoly eval_lambda(const Rational& value) const;
    CoeffPoly substitute_lambda(const Scalar& value) const;

    std::string str() const;

private:
    void check_dim(const CoeffPoly& o) const;
    int n_ = 0;
    std::map<MultiIndex, Scalar> terms_;
};

// Canonical text form: "p/q", "l", "x1".."xn", "^", "*", "+"/"-".
CoeffPoly parse_coeff_poly(const std::string& text, int n);
Scalar parse_scalar(const std::string& text);

} // namespace projsym
