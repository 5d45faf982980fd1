#include "projsym/sampling.hpp"

namespace projsym {

int Sampler::integer(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Scalar Sampler::small_scalar(int max_lambda_degree)
{
    Scalar s;
    for (int p = 0; p <= max_lambda_degree; ++p)
        s += Scalar::monomial(integer(-3, 3), p);
    return s;
}

CoeffPoly Sampler::coeff_poly(int n, int max_degree, int max_lambda_degree, int terms)
{
    auto idx = indices_up_to(n, max_degree);
    CoeffPoly p(n);
    for (int t = 0; t < terms; ++t)
        p.add_term(idx[integer(0, static_cast<int>(idx.size()) - 1)],
                   small_scalar(max_lambda_degree));
    return p;
}

VectorField Sampler::field(int n, int max_degree)
{
    std::vector<CoeffPoly> comp;
    for (int i = 0; i < n; ++i) comp.push_back(coeff_poly(n, max_degree, 0, 2));
    return VectorField(std::move(comp));
}

SymbolPoly Sampler::symbol(int n, int xi_degree, int max_coeff_degree, int terms)
{
    auto xi = indices_of_degree(n, xi_degree);
    SymbolPoly s(n);
    for (int t = 0; t < terms; ++t)
        s.add_term(xi[integer(0, static_cast<int>(xi.size()) - 1)],
                   coeff_poly(n, max_coeff_degree, 0, 2));
    return s;
}

SymbolPoly Sampler::inhomogeneous_symbol(int n, int max_xi_degree, int max_coeff_degree)
{
    SymbolPoly s(n);
    for (int d = 0; d <= max_xi_degree; ++d) s += symbol(n, d, max_coeff_degree, 2);
    return s;
}

} // namespace projsym
