#include "projsym/apps.hpp"

namespace projsym {

SymbolPoly GradedProduct::grade(int m) const
{
    if (m < 0 || m >= static_cast<int>(grades.size())) return SymbolPoly(n);
    return grades[m];
}

void GradedProduct::add(int m, const SymbolPoly& v)
{
    if (v.is_zero()) return;
    if (m >= static_cast<int>(grades.size())) grades.resize(m + 1, SymbolPoly(n));
    grades[m] += v;
}

GradedProduct star_product(const SymbolPoly& F, const SymbolPoly& G, const Scalar& weight)
{
    int n = F.dimension();
    if (G.dimension() != n) throw std::invalid_argument("star_product: dimension mismatch");
    GradedProduct out;
    out.n = n;
    for (int p = 0; p <= std::max(F.degree(), 0); ++p) {
        SymbolPoly Fp = F.homogeneous_part(p);
        if (Fp.is_zero()) continue;
        DiffOp QF = quantization_map(Fp, weight);
        for (int q = 0; q <= std::max(G.degree(), 0); ++q) {
            SymbolPoly Gq = G.homogeneous_part(q);
            if (Gq.is_zero()) continue;
            SymbolPoly S = symbol_map(compose(QF, quantization_map(Gq, weight)), weight);
            for (int j = 0; j <= S.degree(); ++j)
                out.add(p + q - j, S.homogeneous_part(j));
        }
    }
    if (out.grades.empty()) out.grades.resize(1, SymbolPoly(n));
    return out;
}

namespace {

// graded composition (P stargraded) * H where P is already a graded product
GradedProduct star_graded(const GradedProduct& P, const SymbolPoly& H, const Scalar& w, bool left)
{
    GradedProduct out;
    out.n = P.n;
    for (int m = 0; m <= P.top_grade(); ++m) {
        if (P.grade(m).is_zero()) continue;
        GradedProduct inner = left ? star_product(P.grade(m), H, w)
                                   : star_product(H, P.grade(m), w);
        for (int j = 0; j <= inner.top_grade(); ++j)
            out.add(m + j, inner.grade(j));
    }
    return out;
}

} // namespace

StarReport check_star(int n, int max_degree, const Scalar& weight)
{
    StarReport rep;
    rep.note = "C1(F,G)-C1(G,F) = {F,G}: the displayed first-order condition holds "
               "for the Poisson bracket at half the D2 normalization";
    // enumerate monomials x^b xi^a with |a|+|b| <= max_degree
    std::vector<SymbolPoly> monos;
    for (const auto& a : indices_up_to(n, max_degree))
        for (const auto& b : indices_up_to(n, max_degree - a.order()))
            monos.push_back(SymbolPoly::monomial(n, a, CoeffPoly::monomial(n, b, Scalar(1))));
    auto deg = [](const SymbolPoly& s) {
        int d = 0;
        for (const auto& [m, c] : s.terms()) d = std::max(d, m.order() + c.total_degree());
        return d;
    };
    for (const auto& F : monos) {
        for (const auto& G : monos) {
            if (deg(F) + deg(G) > max_degree) continue;
            GradedProduct FG = star_product(F, G, weight);
            GradedProduct GF = star_product(G, F, weight);
            ++rep.checked;
            if (FG.grade(0) != F * G) {
                rep.pass = false;
                rep.first_failure = "C0 != FG for F=" + F.str() + ", G=" + G.str();
                return rep;
            }
            if (FG.grade(1) - GF.grade(1) != poisson_bracket(F, G)) {
                rep.pass = false;
                rep.first_failure = "C1 antisymmetrization != Poisson for F=" + F.str()
                    + ", G=" + G.str();
                return rep;
            }
            for (const auto& H : monos) {
                if (deg(F) + deg(G) + deg(H) > max_degree) continue;
                GradedProduct lhs = star_graded(FG, H, weight, true);
                GradedProduct rhs = star_graded(star_product(G, H, weight), F, weight, false);
                ++rep.checked;
                int top = std::max(lhs.top_grade(), rhs.top_grade());
                for (int m = 0; m <= top; ++m) {
                    if (lhs.grade(m) != rhs.grade(m)) {
                        rep.pass = false;
                        rep.first_failure = "associativity fails at grade "
                            + std::to_string(m) + " for F=" + F.str() + ", G=" + G.str()
                            + ", H=" + H.str();
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

DiffOp intertwiner_L2(const DiffOp& A, const Rational& lambda_from, const Rational& lambda_to)
{
    for (const Rational& w : {lambda_from, lambda_to})
        if (w == 0 || w == 1 || w == Rational(1, 2))
            throw std::invalid_argument("intertwiner_L2: weight in {0, 1/2, 1}");
    if (A.order() > 2) throw std::invalid_argument("intertwiner_L2: order > 2");
    SymbolPoly S = symbol_map(A, Scalar(lambda_from));
    Rational c1 = (2 * lambda_from - 1) / (2 * lambda_to - 1);
    Rational c0 = (lambda_from * (lambda_from - 1)) / (lambda_to * (lambda_to - 1));
    SymbolPoly T = S.homogeneous_part(2)
                 + S.homogeneous_part(1).scaled(Scalar(c1))
                 + S.homogeneous_part(0).scaled(Scalar(c0));
    return quantization_map(T, Scalar(lambda_to));
}

SymbolPoly symbol_anticommutator(const VectorField& X, const VectorField& Y, const Scalar& weight)
{
    if (X.dimension() != Y.dimension())
        throw std::invalid_argument("symbol_anticommutator: dimension mismatch");
    return symbol_map(anticommutator(lie_operator(X, weight), lie_operator(Y, weight)), weight);
}

SymbolPoly symbol_anticommutator_closed(const VectorField& X, const VectorField& Y,
                                        const Scalar& weight)
{
    int n = X.dimension();
    if (Y.dimension() != n) throw std::invalid_argument("symbol_anticommutator: dimension mismatch");
    CoeffPoly dX = X.divergence(), dY = Y.divergence();
    SymbolPoly a2(n), a1(n), a0c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a2.add_term(MultiIndex::unit(n, i) + MultiIndex::unit(n, j),
                        X.component(i) * Y.component(j) + Y.component(i) * X.component(j));
    Scalar f1 = (Scalar(2) * weight - Scalar(1)) * Scalar(Rational(1, n + 3));
    for (int i = 0; i < n; ++i) {
        CoeffPoly v = (X.component(i) * dY + Y.component(i) * dX).scaled(Scalar(2));
        for (int j = 0; j < n; ++j)
            v -= (X.component(j) * Y.component(i).differentiate(j + 1)
                + Y.component(j) * X.component(i).differentiate(j + 1)).scaled(Scalar(n + 1));
        a1.add_term(MultiIndex::unit(n, i), v.scaled(f1));
    }
    CoeffPoly z(n);
    for (int i = 0; i < n; ++i)
        z += X.component(i) * dY.differentiate(i + 1) + Y.component(i) * dX.differentiate(i + 1);
    z += dX * dY;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            z -= (X.component(i).differentiate(j + 1) * Y.component(j).differentiate(i + 1))
                     .scaled(Scalar(n + 1));
    Scalar f0 = -(Scalar(2) * weight * (weight - Scalar(1))) * Scalar(Rational(1, n + 2));
    a0c.add_term(MultiIndex(n), z.scaled(f0));
    return a2 + a1 + a0c;
}

DiffOp geodesic_operator(const SymbolPoly& g_inv)
{
    int n = g_inv.dimension();
    if (g_inv.is_zero() || !g_inv.is_homogeneous() || g_inv.degree() != 2)
        throw std::invalid_argument("geodesic_operator: symbol must be quadratic in xi");
    SymbolPoly S = g_inv;
    S += div_operator(g_inv).scaled(Scalar(Rational(1, 2)));
    S += div_operator(div_operator(g_inv))
             .scaled(Scalar(Rational(n + 1, Integer(4) * (n + 2)) / 2));
    return standard_quantization(S);
}

} // namespace projsym
