#pragma once

#include "projsym/cocycles.hpp"

namespace projsym {

// Density on the line: coefficient in x1, weight an x1-free polynomial value
// (rationals, the formal lambda, or extra variables standing in for formal
// weights all embed into CoeffPoly).
struct Density1D {
    CoeffPoly value;
    CoeffPoly weight;

    Density1D(CoeffPoly v, CoeffPoly w);
    Density1D(CoeffPoly v, const Rational& w);
    int dimension() const { return value.dimension(); }

    friend Density1D operator+(const Density1D& a, const Density1D& b);
};

// binomial with polynomial upper argument, over the multivariate ring
CoeffPoly binom_poly(const CoeffPoly& t, int m);

// L_X phi = X phi' + w X' phi  (derivatives along x1)
Density1D lie_1d(const CoeffPoly& X, const Density1D& phi);

// J_m(phi, psi) = sum_{i+j=m} (-1)^i m! binom(2w_phi+m-1, i) binom(2w_psi+m-1, j)
//                 phi^(i) psi^(j); output weight w_phi + w_psi + m.
Density1D transvectant(const Density1D& phi, const Density1D& psi, int m);

// Coefficient of X^(i) a^(m-i) in the transvectant continued to first-slot
// weight -1 (the simple zero in the weight is divided out exactly); defined
// for i >= m-2. The a-weight is mu.
Rational resonant_transvectant_coeff(int m, int i, const Rational& mu);

// The extracted correction gamma_j at n = 1 on pure degree-k symbols:
// E(X, a) = sum_{i=3}^{j+1} e_i X^(i) a^(j+1-i) with e_i in Q[lambda].
struct Correction1D {
    int k = 0, j = 0;
    std::map<int, Scalar> e;              // i -> e_i
    bool proportional = false;            // all ratios e_i/e_{j+1} constant
    std::vector<std::pair<int, Rational>> shape; // (i, e_i/e_{j+1}) when proportional
    Scalar t;                             // e_{j+1} / N_{j+1} when proportional
    Rational normalization;               // N_{j+1}
};

Correction1D extract_correction_1d(int k, int j);

struct OneDimReport {
    bool pass = true;
    std::vector<std::string> lines;
    std::vector<std::string> notes;
    void check(bool ok, const std::string& what);
};

// sl2-equivariance of J_m at formal weights (x2, x3 serve as the two
// independent weight variables), m <= m_max.
OneDimReport check_transvectant_equivariance(int m_max);

// For every 2 <= j <= min(k, j_max), k <= k_max: parity t(1-lambda) = (-1)^j t
// and membership of t in the span of the parity-matching Bernoulli polynomials.
OneDimReport check_bernoulli_structure(int k_max, int j_max);

// c3 = X''' a is a cocycle; c4 = s X'''' a + 2 X''' a' has a unique cocycle
// constant s per weight (solved and recorded); no multiple of the continued
// J5 shape is a cocycle.
OneDimReport check_1d_cocycles();

} // namespace projsym
