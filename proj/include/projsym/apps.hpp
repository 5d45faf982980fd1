#pragma once

#include "projsym/cocycles.hpp"

namespace projsym {

// F * G expanded by grade: grades[m] is the coefficient of the m-th power of
// the deformation parameter; grades[0] is the pointwise product.
struct GradedProduct {
    int n = 0;
    std::vector<SymbolPoly> grades;

    SymbolPoly grade(int m) const;
    int top_grade() const { return static_cast<int>(grades.size()) - 1; }
    void add(int m, const SymbolPoly& v);
};

// Q(F)·Q(G) re-expanded through the equivariant symbol: a degree-j homogeneous
// piece coming from inputs of degrees (p,q) lands at grade p+q-j.
GradedProduct star_product(const SymbolPoly& F, const SymbolPoly& G,
                           const Scalar& weight = Scalar::lambda());

struct StarReport {
    bool pass = true;
    long checked = 0;
    std::string first_failure;
    std::string note; // normalization remark for the C1 condition
};

// (a) grade 0 = FG, (b) C1(F,G)-C1(G,F) = {F,G}, (c) grade-wise associativity
// over monomial triples of total degree <= max_degree.
StarReport check_star(int n, int max_degree, const Scalar& weight = Scalar::lambda());

// sigma-conjugated diagonal map on order <= 2 operators
// (1, (2 lam-1)/(2 mu-1), lam(lam-1)/(mu(mu-1))); weights not in {0, 1/2, 1}.
DiffOp intertwiner_L2(const DiffOp& A, const Rational& lambda_from, const Rational& lambda_to);

// sigma^w([L_X, L_Y]_+), computed by compose-then-symbolize.
SymbolPoly symbol_anticommutator(const VectorField& X, const VectorField& Y,
                                 const Scalar& weight = Scalar::lambda());

// The closed-form right-hand side it must equal.
SymbolPoly symbol_anticommutator_closed(const VectorField& X, const VectorField& Y,
                                        const Scalar& weight = Scalar::lambda());

// A_H = g^{ij} d_i d_j + d_j(g^{ij}) d_i + (n+1)/(4(n+2)) d_i d_j(g^{ij})
// for a quadratic-in-xi symbol; equals quantization at weight 1/2.
DiffOp geodesic_operator(const SymbolPoly& g_inv);

} // namespace projsym
