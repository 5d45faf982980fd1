#include "projsym/diff_op.hpp"

#include <algorithm>
#include <sstream>

namespace projsym {

DiffOp DiffOp::constant(int n, const CoeffPoly& c)
{
    DiffOp a(n);
    a.add_term(MultiIndex(n), c);
    return a;
}

DiffOp DiffOp::partial(int n, int axis)
{
    if (axis < 1 || axis > n) throw std::out_of_range("DiffOp::partial: axis");
    return monomial(n, MultiIndex::unit(n, axis - 1), CoeffPoly(n, Scalar(1)));
}

DiffOp DiffOp::monomial(int n, const MultiIndex& dx_idx, const CoeffPoly& c)
{
    DiffOp a(n);
    a.add_term(dx_idx, c);
    return a;
}

int DiffOp::order() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.order());
    return d;
}

CoeffPoly DiffOp::coeff(const MultiIndex& dx_idx) const
{
    auto it = terms_.find(dx_idx);
    return it == terms_.end() ? CoeffPoly(n_) : it->second;
}

void DiffOp::add_term(const MultiIndex& dx_idx, const CoeffPoly& c)
{
    if (dx_idx.size() != n_) throw std::invalid_argument("DiffOp: index length != dimension");
    if (c.dimension() != n_) throw std::invalid_argument("DiffOp: coefficient dimension");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(dx_idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const
{
    DiffOp r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o)
{
    if (n_ != o.n_) throw std::invalid_argument("DiffOp: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o)
{
    if (n_ != o.n_) throw std::invalid_argument("DiffOp: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffOp DiffOp::scaled(const Scalar& c) const
{
    DiffOp r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v.scaled(c));
    return r;
}

CoeffPoly DiffOp::apply(const CoeffPoly& f) const
{
    CoeffPoly r(n_);
    for (const auto& [m, c] : terms_) r += c * f.derivative(m);
    return r;
}

DiffOp DiffOp::eval_lambda(const Rational& value) const
{
    DiffOp r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.eval_lambda(value));
    return r;
}

DiffOp DiffOp::substitute_lambda(const Scalar& value) const
{
    DiffOp r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.substitute_lambda(value));
    return r;
}

std::string DiffOp::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (int i = 0; i < n_; ++i) {
            if (it->first[i] == 0) continue;
            os << "*d" << (i + 1);
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

SymbolPoly standard_symbol(const DiffOp& A)
{
    SymbolPoly p(A.dimension());
    for (const auto& [m, c] : A.terms()) p.add_term(m, c);
    return p;
}

DiffOp standard_quantization(const SymbolPoly& P)
{
    DiffOp a(P.dimension());
    for (const auto& [m, c] : P.terms()) a.add_term(m, c);
    return a;
}

DiffOp compose(const DiffOp& A, const DiffOp& B)
{
    int n = A.dimension();
    if (B.dimension() != n) throw std::invalid_argument("compose: dimension mismatch");
    DiffOp r(n);
    // (c d^alpha)(b d^beta) = c sum_{gamma <= alpha} binom(alpha,gamma) d^gamma(b) d^{alpha-gamma+beta}
    for (const auto& [alpha, c] : A.terms()) {
        for (const auto& [beta, b] : B.terms()) {
            for (const auto& gamma : indices_up_to(n, alpha.order())) {
                if (!alpha.contains(gamma)) continue;
                CoeffPoly db = b.derivative(gamma);
                if (db.is_zero()) continue;
                r.add_term(alpha - gamma + beta,
                           (c * db).scaled(Scalar(alpha.binom(gamma))));
            }
        }
    }
    return r;
}

DiffOp commutator(const DiffOp& A, const DiffOp& B) { return compose(A, B) - compose(B, A); }
DiffOp anticommutator(const DiffOp& A, const DiffOp& B) { return compose(A, B) + compose(B, A); }

DiffOp lie_operator(const VectorField& X, const Scalar& weight)
{
    int n = X.dimension();
    DiffOp L(n);
    for (int i = 0; i < n; ++i)
        L.add_term(MultiIndex::unit(n, i), X.component(i));
    L.add_term(MultiIndex(n), X.divergence().scaled(weight));
    return L;
}

DiffOp ad_action(const VectorField& X, const DiffOp& A, const Scalar& weight)
{
    if (X.dimension() != A.dimension()) throw std::invalid_argument("ad_action: dimension mismatch");
    return commutator(lie_operator(X, weight), A);
}

DiffOp formal_adjoint(const DiffOp& A)
{
    int n = A.dimension();
    DiffOp r(n);
    for (const auto& [alpha, c] : A.terms()) {
        DiffOp term = compose(DiffOp::monomial(n, alpha, CoeffPoly(n, Scalar(1))),
                              DiffOp::constant(n, c));
        r += (alpha.order() % 2 == 0) ? term : -term;
    }
    return r;
}

std::vector<VectorField> sl_generators(int n)
{
    if (n < 1) throw std::invalid_argument("sl_generators: n < 1");
    std::vector<VectorField> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(VectorField::monomial(n, i, MultiIndex(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            gens.push_back(VectorField::monomial(n, j, MultiIndex::unit(n, i)));
    for (int i = 0; i < n; ++i) {
        std::vector<CoeffPoly> comp(n, CoeffPoly(n));
        for (int j = 0; j < n; ++j)
            comp[j] = CoeffPoly::monomial(n, MultiIndex::unit(n, i) + MultiIndex::unit(n, j), Scalar(1));
        gens.push_back(VectorField(std::move(comp)));
    }
    return gens;
}

DiffOp symmetrized_product(const std::vector<VectorField>& fields, const Scalar& weight)
{
    if (fields.empty()) throw std::invalid_argument("symmetrized_product: empty list");
    int n = fields[0].dimension();
    std::vector<int> perm(fields.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    DiffOp r(n);
    do {
        DiffOp prod = lie_operator(fields[perm[0]], weight);
        for (std::size_t i = 1; i < perm.size(); ++i)
            prod = compose(prod, lie_operator(fields[perm[i]], weight));
        r += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

} // namespace projsym
