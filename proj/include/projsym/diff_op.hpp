#pragma once

#include "projsym/symbol_poly.hpp"

namespace projsym {

// Linear differential operator sum_alpha c_alpha(x) d^alpha with CoeffPoly
// coefficients (coefficient to the left of the derivatives).
class DiffOp {
public:
    DiffOp() = default;
    explicit DiffOp(int n) : n_(n) {}
    static DiffOp identity(int n) { return constant(n, CoeffPoly(n, Scalar(1))); }
    static DiffOp constant(int n, const CoeffPoly& c);
    static DiffOp partial(int n, int axis);       // d_axis, 1-based
    static DiffOp monomial(int n, const MultiIndex& dx_idx, const CoeffPoly& c);

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int order() const;                            // max |dx-index|, -1 for zero
    const std::map<MultiIndex, CoeffPoly>& terms() const { return terms_; }
    CoeffPoly coeff(const MultiIndex& dx_idx) const;

    void add_term(const MultiIndex& dx_idx, const CoeffPoly& c);

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    DiffOp scaled(const Scalar& c) const;
    friend bool operator==(const DiffOp& a, const DiffOp& b)
    { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

    CoeffPoly apply(const CoeffPoly& f) const;    // A(f)
    DiffOp eval_lambda(const Rational& value) const;
    DiffOp substitute_lambda(const Scalar& value) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<MultiIndex, CoeffPoly> terms_;
};

// Standard symbol: retag d^alpha <-> xi^alpha (no reordering involved).
SymbolPoly standard_symbol(const DiffOp& A);
DiffOp standard_quantization(const SymbolPoly& P);

DiffOp compose(const DiffOp& A, const DiffOp& B);
DiffOp commutator(const DiffOp& A, const DiffOp& B);
DiffOp anticommutator(const DiffOp& A, const DiffOp& B);

// L^w_X = X^i d_i + w div(X); the weight is any element of Q[lambda].
DiffOp lie_operator(const VectorField& X, const Scalar& weight = Scalar::lambda());

DiffOp ad_action(const VectorField& X, const DiffOp& A,
                 const Scalar& weight = Scalar::lambda());

// (c d^alpha)* = (-1)^{|alpha|} d^alpha ∘ c, extended linearly.
DiffOp formal_adjoint(const DiffOp& A);

// d_i (n), x^i d_j (n^2), x^i E (n): dim sl_{n+1} = n^2 + 2n generators.
std::vector<VectorField> sl_generators(int n);

// Sum over all orderings of L^w_{X_1} ∘ ... ∘ L^w_{X_k}.
DiffOp symmetrized_product(const std::vector<VectorField>& fields,
                           const Scalar& weight = Scalar::lambda());

} // namespace projsym
