#pragma once

#include <functional>

#include "projsym/equivariant.hpp"

namespace projsym {

// Coefficients (alpha_u, beta_u, delta_u), u = 1..p, delta_1 = 0, of the
// bilinear ansatz Vect x S^k -> S^{k-p} vanishing on the affine subalgebra.
struct GammaAnsatz {
    int p = 0, k = 0, n = 0;
    std::vector<Scalar> alpha; // size p, alpha[u-1]
    std::vector<Scalar> beta;  // size p
    std::vector<Scalar> delta; // size p, delta[0] unused (= 0)

    static GammaAnsatz zero(int p, int k, int n);
    bool is_zero() const;
};

// Evaluates the ansatz on (X, a) for homogeneous a of degree k.
// Monomial-level reading (D1/D4): with Q_u = Div^{p-u} P_a,
//   alpha-family: (1/(k-p)) sum_m sum_{|J|=u+1} mult(J) d^J X^m  xi_m d_xi^J Q_u
//   beta-family:             sum_{|J|=u}   mult(J) d^J(div X)        d_xi^J Q_u
//   delta-family:     sum_m sum_{|J|=u}   mult(J) d^J X^m    d_xi^J d_{x^m} Q_u
// all scaled by the symmetric-contraction normalization (k-p)!/k!.
SymbolPoly apply_ansatz(const GammaAnsatz& G, const VectorField& X, const SymbolPoly& a);

struct GammaBarResult {
    Tensor12 tensor;
    bool degenerate = false; // n == 1, where the cocycle is identically zero
};

// Trace-free cocycle: gamma_bar(X)^k_{ij} = d_i d_j X^k
//   - (1/(n+1)) (delta^k_j d_i(div X) + delta^k_i d_j(div X)).
GammaBarResult gamma_bar(const VectorField& X);

// Closed form (2 lambda - 1) k(k-1)(n+1) / (2(2k+n-1)) <gamma_bar(X), a>.
SymbolPoly gamma1(const VectorField& X, const SymbolPoly& a,
                  const Scalar& weight = Scalar::lambda());

struct SysSolution {
    int dimension = 0;
    std::vector<GammaAnsatz> basis;
};

// Exact solution space of the recurrent classification system, optionally with
// the cocycle constraints (beta_1 = beta_2 for p >= 2, plus beta_1 = beta_p
// for p >= 3). For k == p the alpha family is absent.
SysSolution solve_sys(int k, int p, int n, bool cocycle_constraints);

// The unique (up to scale) p = 2 cocycle coefficients.
GammaAnsatz c2_coeffs(int k, int n);

// prefactor k(k-1)/(2(2k+n-2)) and the lambda-polynomial coefficients of the
// p = 2 correction of the module action, verified against extract_gamma.
std::pair<Scalar, GammaAnsatz> gamma2_coeffs(int k, int n);

struct BilinearMap {
    int p = 0, k = 0, n = 0;
    std::function<SymbolPoly(const VectorField&, const SymbolPoly&)> eval;
};

// gamma_p as the degree-(k-p) block of sigma ∘ ad L^w_X ∘ sigma^{-1} applied
// to pure degree-k symbols: the brute-force oracle.
BilinearMap extract_gamma(int p, int k, int n, const Scalar& weight = Scalar::lambda());

struct CocycleReport {
    bool pass = true;
    long checked = 0;
    std::string first_failure;
};

// 1-cocycle identity for a bilinear map with values in S^{k-p}:
// L_X(c(Y,a)) - c(Y, L_X a) - (X <-> Y) - c([X,Y], a) = 0 on the samples.
CocycleReport check_cocycle(const BilinearMap& c,
                            const std::vector<std::pair<VectorField, VectorField>>& field_pairs,
                            const std::vector<SymbolPoly>& symbols);

// Same identity for the Tensor12-valued map X -> gamma_bar(X).
CocycleReport check_gamma_bar_cocycle(int n,
                            const std::vector<std::pair<VectorField, VectorField>>& field_pairs);

// X d/dx -> X''' (n = 1 only).
CoeffPoly gelfand_fuchs(const VectorField& X);

} // namespace projsym
