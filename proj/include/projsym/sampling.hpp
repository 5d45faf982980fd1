#pragma once

#include <random>

#include "projsym/symbol_poly.hpp"

namespace projsym {

// Deterministic small random inputs for property sweeps. Coefficients are
// small integers so the exact arithmetic stays light.
class Sampler {
public:
    explicit Sampler(unsigned seed = 20240901u) : rng_(seed) {}

    int integer(int lo, int hi);
    Scalar small_scalar(int max_lambda_degree = 0);
    CoeffPoly coeff_poly(int n, int max_degree, int max_lambda_degree = 0, int terms = 3);
    VectorField field(int n, int max_degree);
    SymbolPoly symbol(int n, int xi_degree, int max_coeff_degree, int terms = 3);
    SymbolPoly inhomogeneous_symbol(int n, int max_xi_degree, int max_coeff_degree);

private:
    std::mt19937 rng_;
};

} // namespace projsym
