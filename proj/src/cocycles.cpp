#include "projsym/cocycles.hpp"

namespace projsym {

GammaAnsatz GammaAnsatz::zero(int p, int k, int n)
{
    GammaAnsatz g;
    g.p = p; g.k = k; g.n = n;
    g.alpha.assign(p, Scalar());
    g.beta.assign(p, Scalar());
    g.delta.assign(p, Scalar());
    return g;
}

bool GammaAnsatz::is_zero() const
{
    for (const auto& v : alpha) if (!v.is_zero()) return false;
    for (const auto& v : beta) if (!v.is_zero()) return false;
    for (const auto& v : delta) if (!v.is_zero()) return false;
    return true;
}

namespace {

// mult(J) = |J|! / J!  — ordered-tuple count of a derivative multi-index
Scalar tuple_mult(const MultiIndex& J)
{
    return Scalar(Rational(factorial(J.order()), J.factorial()));
}

} // namespace

SymbolPoly apply_ansatz(const GammaAnsatz& G, const VectorField& X, const SymbolPoly& a)
{
    const int p = G.p, k = G.k, n = G.n;
    if (X.dimension() != n || a.dimension() != n)
        throw std::invalid_argument("apply_ansatz: dimension mismatch");
    if (!a.is_homogeneous() || (a.degree() != k && !a.is_zero()))
        throw std::invalid_argument("apply_ansatz: symbol not homogeneous of degree k");
    if (p > k) throw std::invalid_argument("apply_ansatz: p > k");

    CoeffPoly divX = X.divergence();
    SymbolPoly out(n);
    SymbolPoly Q = a; // Div^{p-u} P_a, built up as u decreases from p
    for (int u = p; u >= 1; --u) {
        // alpha_u (only when k > p)
        if (k > p && !G.alpha[u - 1].is_zero()) {
            SymbolPoly acc(n);
            for (const auto& J : indices_of_degree(n, u + 1)) {
                SymbolPoly dQ = Q;
                for (int i = 0; i < n; ++i)
                    for (int t = 0; t < J[i]; ++t) dQ = dQ.dxi(i + 1);
                if (dQ.is_zero()) continue;
                for (int m = 0; m < n; ++m) {
                    CoeffPoly dX = X.component(m).derivative(J);
                    if (dX.is_zero()) continue;
                    acc += (SymbolPoly::monomial(n, MultiIndex::unit(n, m), dX) * dQ)
                               .scaled(tuple_mult(J));
                }
            }
            out += acc.scaled(G.alpha[u - 1] * Scalar(Rational(1, k - p)));
        }
        // beta_u and delta_u
        if (!G.beta[u - 1].is_zero() || (u >= 2 && !G.delta[u - 1].is_zero())) {
            for (const auto& J : indices_of_degree(n, u)) {
                SymbolPoly dQ = Q;
                for (int i = 0; i < n; ++i)
                    for (int t = 0; t < J[i]; ++t) dQ = dQ.dxi(i + 1);
                if (dQ.is_zero()) continue;
                Scalar mult = tuple_mult(J);
                if (!G.beta[u - 1].is_zero()) {
                    CoeffPoly dd = divX.derivative(J);
                    if (!dd.is_zero())
                        out += (SymbolPoly::constant(n, dd) * dQ)
                                   .scaled(G.beta[u - 1] * mult);
                }
                if (u >= 2 && !G.delta[u - 1].is_zero()) {
                    for (int m = 0; m < n; ++m) {
                        CoeffPoly dX = X.component(m).derivative(J);
                        if (dX.is_zero()) continue;
                        out += (SymbolPoly::constant(n, dX) * dQ.dx(m + 1))
                                   .scaled(G.delta[u - 1] * mult);
                    }
                }
            }
        }
        if (u > 1) Q = div_operator(Q);
    }
    return out.scaled(Scalar(Rational(factorial(k - p), factorial(k))));
}

GammaBarResult gamma_bar(const VectorField& X)
{
    int n = X.dimension();
    GammaBarResult res{Tensor12(n), n == 1};
    if (n == 1) return res;
    Tensor12 T = sym_differential_squared(X);
    CoeffPoly divX = X.divergence();
    std::vector<CoeffPoly> u;
    for (int i = 0; i < n; ++i) u.push_back(divX.differentiate(i + 1));
    Scalar f(Rational(1, n + 1));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                CoeffPoly corr(n);
                if (k == j) corr += u[i];
                if (k == i) corr += u[j];
                res.tensor.set_sym(k, i, j, T.at(k, i, j) - corr.scaled(f));
            }
    return res;
}

SymbolPoly gamma1(const VectorField& X, const SymbolPoly& a, const Scalar& weight)
{
    int n = X.dimension();
    if (n < 2) throw std::invalid_argument("gamma1: n < 2");
    if (!a.is_homogeneous()) throw std::invalid_argument("gamma1: inhomogeneous symbol");
    int k = a.degree();
    if (k < 2) throw std::invalid_argument("gamma1: degree < 2");
    Scalar pref = (Scalar(2) * weight - Scalar(1))
        * Scalar(Rational(Integer(k) * (k - 1) * (n + 1), Integer(2) * (2 * k + n - 1)));
    return contract_12(gamma_bar(X).tensor, a).scaled(pref);
}

SysSolution solve_sys(int k, int p, int n, bool cocycle_constraints)
{
    if (p < 1 || k < p) throw std::invalid_argument("solve_sys: need k >= p >= 1");
    const bool with_alpha = (k > p);
    const int na = with_alpha ? p : 0;
    // unknown layout: alpha_1..alpha_p (when k > p), beta_1..beta_p, delta_2..delta_p
    const int cols = na + p + (p - 1);
    auto acol = [&](int u) { return u - 1; };              // valid when with_alpha
    auto bcol = [&](int u) { return na + u - 1; };
    auto dcol = [&](int u) { return na + p + u - 2; };     // u >= 2

    RationalMatrix A;
    auto row = [&]() -> RationalVector& { A.emplace_back(cols, Rational(0)); return A.back(); };
    for (int u = 1; u <= p; ++u) {
        Rational c = Rational((p - u)) * (2 * k + n - p + u);
        { // -u(u+2) alpha_{u+1} + (k-p) delta_{u+1} + c alpha_u = 0
            auto& r = row();
            if (with_alpha && u + 1 <= p) r[acol(u + 1)] -= Rational(u) * (u + 2);
            if (u + 1 <= p) r[dcol(u + 1)] += k - p;
            if (with_alpha) r[acol(u)] += c;
        }
        { // -u(u+1) beta_{u+1} + (u+1) delta_{u+1} + c beta_u = 0
            auto& r = row();
            if (u + 1 <= p) r[bcol(u + 1)] -= Rational(u) * (u + 1);
            if (u + 1 <= p) r[dcol(u + 1)] += u + 1;
            r[bcol(u)] += c;
        }
        { // -(u^2-1) delta_{u+1} + c delta_u = 0
            auto& r = row();
            if (u + 1 <= p) r[dcol(u + 1)] -= Rational(u * u - 1);
            if (u >= 2) r[dcol(u)] += c;
        }
        { // (u+1) delta_{u+1} + (u+1) alpha_u + (k-p+u) delta_u + (n+1) beta_u = 0
            auto& r = row();
            if (u + 1 <= p) r[dcol(u + 1)] += u + 1;
            if (with_alpha) r[acol(u)] += u + 1;
            if (u >= 2) r[dcol(u)] += k - p + u;
            r[bcol(u)] += n + 1;
        }
    }
    if (cocycle_constraints && p >= 2) {
        auto& r = row();
        r[bcol(1)] += 1;
        r[bcol(2)] -= 1;
        if (p >= 3) {
            auto& r2 = row();
            r2[bcol(1)] += 1;
            r2[bcol(p)] -= 1;
        }
    }

    RationalVector rhs(A.size(), Rational(0));
    LinearSolution sol = gauss_solve(std::move(A), std::move(rhs));
    SysSolution out;
    out.dimension = static_cast<int>(sol.nullspace.size());
    for (const auto& v : sol.nullspace) {
        GammaAnsatz g = GammaAnsatz::zero(p, k, n);
        for (int u = 1; u <= p; ++u) {
            if (with_alpha) g.alpha[u - 1] = Scalar(v[acol(u)]);
            g.beta[u - 1] = Scalar(v[bcol(u)]);
            if (u >= 2) g.delta[u - 1] = Scalar(v[dcol(u)]);
        }
        out.basis.push_back(std::move(g));
    }
    return out;
}

GammaAnsatz c2_coeffs(int k, int n)
{
    if (k < 2 || n < 2) throw std::invalid_argument("c2_coeffs: need k >= 2, n >= 2");
    GammaAnsatz g = GammaAnsatz::zero(2, k, n);
    g.alpha[0] = Scalar(k - 2);
    g.alpha[1] = Scalar(Rational(Integer(k - 2) * (2 * k + n + 1), 6));
    g.beta[0] = Scalar(1);
    g.beta[1] = Scalar(1);
    g.delta[1] = Scalar(Rational(-(2 * k + n - 3), 2));
    return g;
}

std::pair<Scalar, GammaAnsatz> gamma2_coeffs(int k, int n)
{
    if (k < 2) throw std::invalid_argument("gamma2_coeffs: k < 2");
    if (n < 2) throw std::invalid_argument("gamma2_coeffs: n < 2");
    Scalar lam2 = Scalar::lambda() * (Scalar::lambda() - Scalar(1)); // lambda(lambda-1)
    const int d1 = (2 * k + n - 1) * (2 * k + n - 3);
    const int d2 = 2 * k + n - 3;
    const int s = (n + 1) * (n + 1);
    GammaAnsatz g = GammaAnsatz::zero(2, k, n);
    g.alpha[0] = -(lam2 * Scalar(2 * s) + Scalar(2 * k * k + 2 * k * n - 4 * k + n * n - n + 2))
                     * Scalar(Rational(k - 2, d1));
    g.alpha[1] = -(lam2 * Scalar(s) + Scalar(Rational(k * k + k * n + n * n - k + n, 3)))
                     * Scalar(Rational(k - 2, d2));
    g.beta[0] = (lam2 * Scalar(Integer(4 * k + n - 5) * (n + 1))
                 - Scalar(Integer(k - 2) * (k - 1))) * Scalar(Rational(2, d1));
    g.beta[1] = (lam2 * Scalar((4 * k - 6) * (n + 1)) + Scalar((k - 2) * n))
                    * Scalar(Rational(1, d2));
    g.delta[1] = (-(lam2 * Scalar(s)) + Scalar(Integer(k - 2) * (k + n - 1)))
                     * Scalar(Rational(1, d2));
    Scalar prefactor(Rational(Integer(k) * (k - 1), Integer(2) * (2 * k + n - 2)));
    return {prefactor, g};
}

BilinearMap extract_gamma(int p, int k, int n, const Scalar& weight)
{
    if (p < 0 || p > k) throw std::invalid_argument("extract_gamma: need 0 <= p <= k");
    BilinearMap bm;
    bm.p = p; bm.k = k; bm.n = n;
    bm.eval = [p, k, n, weight](const VectorField& X, const SymbolPoly& a) {
        if (a.dimension() != n || X.dimension() != n)
            throw std::invalid_argument("extract_gamma: dimension mismatch");
        if (!a.is_zero() && (!a.is_homogeneous() || a.degree() != k))
            throw std::invalid_argument("extract_gamma: symbol not homogeneous of degree k");
        DiffOp A = quantization_map(a, weight);
        SymbolPoly S = symbol_map(ad_action(X, A, weight), weight);
        return S.homogeneous_part(k - p);
    };
    return bm;
}

CocycleReport check_cocycle(const BilinearMap& c,
                            const std::vector<std::pair<VectorField, VectorField>>& field_pairs,
                            const std::vector<SymbolPoly>& symbols)
{
    CocycleReport rep;
    for (const auto& [X, Y] : field_pairs) {
        VectorField XY = bracket(X, Y);
        for (const auto& a : symbols) {
            SymbolPoly d = lie_derivative_symbol(X, c.eval(Y, a)) - c.eval(Y, lie_derivative_symbol(X, a))
                         - lie_derivative_symbol(Y, c.eval(X, a)) + c.eval(X, lie_derivative_symbol(Y, a))
                         - c.eval(XY, a);
            ++rep.checked;
            if (!d.is_zero()) {
                rep.pass = false;
                if (rep.first_failure.empty()) rep.first_failure = "defect " + d.str();
                return rep;
            }
        }
    }
    return rep;
}

CocycleReport check_gamma_bar_cocycle(int n,
                            const std::vector<std::pair<VectorField, VectorField>>& field_pairs)
{
    CocycleReport rep;
    for (const auto& [X, Y] : field_pairs) {
        Tensor12 d = lie_derivative_tensor12(X, gamma_bar(Y).tensor)
                   - lie_derivative_tensor12(Y, gamma_bar(X).tensor)
                   - gamma_bar(bracket(X, Y)).tensor;
        ++rep.checked;
        if (!d.is_zero()) {
            rep.pass = false;
            rep.first_failure = "gamma_bar cocycle defect";
            return rep;
        }
    }
    return rep;
}

CoeffPoly gelfand_fuchs(const VectorField& X)
{
    if (X.dimension() != 1) throw std::invalid_argument("gelfand_fuchs: n != 1");
    return X.component(0).differentiate(1).differentiate(1).differentiate(1);
}

} // namespace projsym
