#pragma once

#include "projsym/diff_op.hpp"

namespace projsym {

// Coefficients of the equivariant symbol map and its inverse, as elements of
// Q[lambda] (weight substituted when given):
//   c^k_{k-m}    = (-1)^m binom(k,m) binom((n+1)w + k - 1, m) / binom(2k+n-m, m)
//   cbar^k_{k-m} =        binom(k,m) binom((n+1)w + k - 1, m) / binom(2k+n-1, m)
Scalar coeff_c(int k, int m, int n, const Scalar& weight = Scalar::lambda());
Scalar coeff_cbar(int k, int m, int n, const Scalar& weight = Scalar::lambda());

// Equivariant symbol of an operator, acting per homogeneous stratum:
// sigma(A)_k-part contributes sum_m c^k_{k-m} * divergence(A_k, m).
SymbolPoly symbol_map(const DiffOp& A, const Scalar& weight = Scalar::lambda());

// Inverse map on symbols (same structure with cbar), then retag xi -> d.
DiffOp quantization_map(const SymbolPoly& P, const Scalar& weight = Scalar::lambda());

// Coefficient-wise symbol (retag only) — the non-equivariant baseline.
SymbolPoly naive_symbol(const DiffOp& A);

struct EquivarianceReport {
    bool pass = true;
    long checked = 0;
    std::string first_failure; // empty when pass
};

// Asserts symbol_map(ad_X A) == L_X(symbol_map A) identically in lambda for
// every sl generator X and monomial operator A within the bounds.
EquivarianceReport check_equivariance(int n, int max_order, int max_coeff_degree);

// Same sweep with the naive symbol; expected to fail (negative control).
EquivarianceReport check_equivariance_naive(int n, int max_order, int max_coeff_degree);

} // namespace projsym
