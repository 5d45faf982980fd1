#pragma once

#include <map>

#include "projsym/coeff_poly.hpp"

namespace projsym {

// Polynomial on T*R^n: finite map xi-multi-index -> CoeffPoly(x).
// Monomial coefficients are the storage convention (D1); symmetric-tensor
// components are coeff(xi^alpha) * alpha! / k! when needed.
class SymbolPoly {
public:
    SymbolPoly() = default;
    explicit SymbolPoly(int n) : n_(n) {}
    static SymbolPoly xi(int n, int axis);        // xi_axis, 1-based
    static SymbolPoly monomial(int n, const MultiIndex& xi_idx, const CoeffPoly& c);
    static SymbolPoly constant(int n, const CoeffPoly& c);

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;                           // max |xi-index|, -1 for zero
    bool is_homogeneous() const;
    const std::map<MultiIndex, CoeffPoly>& terms() const { return terms_; }
    CoeffPoly coeff(const MultiIndex& xi_idx) const;
    SymbolPoly homogeneous_part(int k) const;

    void add_term(const MultiIndex& xi_idx, const CoeffPoly& c);

    SymbolPoly operator-() const;
    SymbolPoly& operator+=(const SymbolPoly& o);
    SymbolPoly& operator-=(const SymbolPoly& o);
    friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
    friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b); // pointwise product
    SymbolPoly scaled(const Scalar& c) const;
    friend bool operator==(const SymbolPoly& a, const SymbolPoly& b)
    { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const SymbolPoly& a, const SymbolPoly& b) { return !(a == b); }

    SymbolPoly dx(int axis) const;                // d/dx^axis of all coefficients
    SymbolPoly dxi(int axis) const;               // d/dxi_axis
    SymbolPoly eval_lambda(const Rational& value) const;

    std::string str() const;

private:
    int n_ = 0;
    std::map<MultiIndex, CoeffPoly> terms_;
};

// Vector field X = X^k d_k with lambda-free polynomial components.
class VectorField {
public:
    explicit VectorField(std::vector<CoeffPoly> components);
    static VectorField zero(int n);
    static VectorField monomial(int n, int component, const MultiIndex& m); // x^m d_component

    int dimension() const { return static_cast<int>(comp_.size()); }
    const CoeffPoly& component(int i) const { return comp_[i]; } // 0-based
    CoeffPoly divergence() const;

    friend VectorField operator+(const VectorField& a, const VectorField& b);
    VectorField scaled(const Rational& c) const;
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.comp_ == b.comp_; }

private:
    std::vector<CoeffPoly> comp_;
};

VectorField bracket(const VectorField& X, const VectorField& Y); // [X,Y]

// Symmetric (1,2)-tensor field, components T^k_{ij} = T^k_{ji}.
class Tensor12 {
public:
    explicit Tensor12(int n);
    int dimension() const { return n_; }
    const CoeffPoly& at(int k, int i, int j) const;
    void set_sym(int k, int i, int j, const CoeffPoly& v); // sets (i,j) and (j,i)
    bool is_zero() const;
    CoeffPoly trace(int i) const;                 // sum_k T^k_{ik}

    friend Tensor12 operator-(const Tensor12& a, const Tensor12& b);
    friend bool operator==(const Tensor12& a, const Tensor12& b)
    { return a.n_ == b.n_ && a.comp_ == b.comp_; }

private:
    int n_;
    std::vector<CoeffPoly> comp_;                 // dense n^3
};

// --- operations on symbols and tensors ---

// Canonical action on symmetric contravariant tensors:
// L_X P = X^i d_{x^i} P - xi_j d_{x^i}(X^j) d_{xi_i} P.
SymbolPoly lie_derivative_symbol(const VectorField& X, const SymbolPoly& P);

// m-fold divergence of a homogeneous degree-k symbol (monomial-level, D1):
// P_{a^(m)} = (k-m)!/k! * (sum_j d_{x^j} d_{xi_j})^m P_a.
SymbolPoly divergence(const SymbolPoly& a, int m);
SymbolPoly div_operator(const SymbolPoly& a);     // one application of sum_j dx_j dxi_j

// D^2 of a vector field: gamma(X)^k_{ij} = d_i d_j X^k.
Tensor12 sym_differential_squared(const VectorField& X);

// Contraction of Prop 4.3 with its 1/(k-1) normalization, monomial level:
// P_out = (1/(k(k-1))) sum_{m,i,j} T^m_{ij} xi_m d_{xi_i} d_{xi_j} P_a.
SymbolPoly contract_12(const Tensor12& T, const SymbolPoly& a);

// {F,G} = d_xi F d_x G - d_x F d_xi G (D2 sign).
SymbolPoly poisson_bracket(const SymbolPoly& F, const SymbolPoly& G);

// Lie derivative of a (1,2)-tensor along X.
Tensor12 lie_derivative_tensor12(const VectorField& X, const Tensor12& T);

} // namespace projsym
