#include "projsym/equivariant.hpp"

namespace projsym {

Scalar coeff_c(int k, int m, int n, const Scalar& weight)
{
    if (m < 0 || m > k || n < 1) throw std::out_of_range("coeff_c: bad indices");
    Scalar num = binom_poly(Scalar(n + 1) * weight + Scalar(k - 1), m);
    Scalar r = Scalar(binom(k, m)) * num;
    r *= Scalar(Rational(1) / binom(2 * k + n - m, m));
    return (m % 2 == 0) ? r : -r;
}

Scalar coeff_cbar(int k, int m, int n, const Scalar& weight)
{
    if (m < 0 || m > k || n < 1) throw std::out_of_range("coeff_cbar: bad indices");
    Scalar num = binom_poly(Scalar(n + 1) * weight + Scalar(k - 1), m);
    Scalar r = Scalar(binom(k, m)) * num;
    r *= Scalar(Rational(1) / binom(2 * k + n - 1, m));
    return r;
}

namespace {

SymbolPoly map_with(const SymbolPoly& P, const Scalar& weight, int n,
                    Scalar (*coefficient)(int, int, int, const Scalar&))
{
    SymbolPoly out(n);
    for (int k = 0; k <= P.degree(); ++k) {
        SymbolPoly part = P.homogeneous_part(k);
        if (part.is_zero()) continue;
        for (int m = 0; m <= k; ++m) {
            SymbolPoly d = divergence(part, m);
            if (d.is_zero()) continue;
            out += d.scaled(coefficient(k, m, n, weight));
        }
    }
    return out;
}

} // namespace

SymbolPoly symbol_map(const DiffOp& A, const Scalar& weight)
{
    return map_with(standard_symbol(A), weight, A.dimension(), coeff_c);
}

DiffOp quantization_map(const SymbolPoly& P, const Scalar& weight)
{
    return standard_quantization(map_with(P, weight, P.dimension(), coeff_cbar));
}

SymbolPoly naive_symbol(const DiffOp& A) { return standard_symbol(A); }

namespace {

EquivarianceReport sweep(int n, int max_order, int max_coeff_degree, bool naive)
{
    EquivarianceReport rep;
    auto gens = sl_generators(n);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        for (const auto& alpha : indices_up_to(n, max_order)) {
            for (const auto& beta : indices_up_to(n, max_coeff_degree)) {
                DiffOp A = DiffOp::monomial(n, alpha, CoeffPoly::monomial(n, beta, Scalar(1)));
                SymbolPoly lhs = naive ? naive_symbol(ad_action(gens[g], A))
                                       : symbol_map(ad_action(gens[g], A));
                SymbolPoly rhs = lie_derivative_symbol(gens[g],
                                     naive ? naive_symbol(A) : symbol_map(A));
                ++rep.checked;
                if (lhs != rhs) {
                    rep.pass = false;
                    if (rep.first_failure.empty())
                        rep.first_failure = "generator #" + std::to_string(g)
                            + ", operator " + A.str();
                    return rep;
                }
            }
        }
    }
    return rep;
}

} // namespace

EquivarianceReport check_equivariance(int n, int max_order, int max_coeff_degree)
{
    return sweep(n, max_order, max_coeff_degree, false);
}

EquivarianceReport check_equivariance_naive(int n, int max_order, int max_coeff_degree)
{
    return sweep(n, max_order, max_coeff_degree, true);
}

} // namespace projsym
