#include "projsym/symbol_poly.hpp"

#include <sstream>

namespace projsym {

SymbolPoly SymbolPoly::xi(int n, int axis)
{
    if (axis < 1 || axis > n) throw std::out_of_range("SymbolPoly::xi: axis");
    return monomial(n, MultiIndex::unit(n, axis - 1), CoeffPoly(n, Scalar(1)));
}

SymbolPoly SymbolPoly::monomial(int n, const MultiIndex& xi_idx, const CoeffPoly& c)
{
    SymbolPoly p(n);
    p.add_term(xi_idx, c);
    return p;
}

SymbolPoly SymbolPoly::constant(int n, const CoeffPoly& c)
{
    return monomial(n, MultiIndex(n), c);
}

int SymbolPoly::degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.order());
    return d;
}

bool SymbolPoly::is_homogeneous() const
{
    int d = -2;
    for (const auto& [m, c] : terms_) {
        if (d == -2) d = m.order();
        else if (m.order() != d) return false;
    }
    return true;
}

CoeffPoly SymbolPoly::coeff(const MultiIndex& xi_idx) const
{
    auto it = terms_.find(xi_idx);
    return it == terms_.end() ? CoeffPoly(n_) : it->second;
}

SymbolPoly SymbolPoly::homogeneous_part(int k) const
{
    SymbolPoly r(n_);
    for (const auto& [m, c] : terms_)
        if (m.order() == k) r.terms_[m] = c;
    return r;
}

void SymbolPoly::add_term(const MultiIndex& xi_idx, const CoeffPoly& c)
{
    if (xi_idx.size() != n_) throw std::invalid_argument("SymbolPoly: index length != dimension");
    if (c.dimension() != n_) throw std::invalid_argument("SymbolPoly: coefficient dimension");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(xi_idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolPoly SymbolPoly::operator-() const
{
    SymbolPoly r(n_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o)
{
    if (n_ != o.n_) throw std::invalid_argument("SymbolPoly: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& o)
{
    if (n_ != o.n_) throw std::invalid_argument("SymbolPoly: dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b)
{
    if (a.n_ != b.n_) throw std::invalid_argument("SymbolPoly: dimension mismatch");
    SymbolPoly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ma + mb, ca * cb);
    return r;
}

SymbolPoly SymbolPoly::scaled(const Scalar& c) const
{
    SymbolPoly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.add_term(m, v.scaled(c));
    return r;
}

SymbolPoly SymbolPoly::dx(int axis) const
{
    SymbolPoly r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.differentiate(axis));
    return r;
}

SymbolPoly SymbolPoly::dxi(int axis) const
{
    SymbolPoly r(n_);
    for (const auto& [m, c] : terms_) {
        int e = m[axis - 1];
        if (e == 0) continue;
        r.add_term(m.plus(axis - 1, -1), c.scaled(Scalar(e)));
    }
    return r;
}

SymbolPoly SymbolPoly::eval_lambda(const Rational& value) const
{
    SymbolPoly r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, c.eval_lambda(value));
    return r;
}

std::string SymbolPoly::str() const
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
            os << "*xi" << (i + 1);
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

// ---- VectorField ----

VectorField::VectorField(std::vector<CoeffPoly> components) : comp_(std::move(components))
{
    if (comp_.empty()) throw std::invalid_argument("VectorField: empty");
    for (const auto& c : comp_) {
        if (c.dimension() != dimension())
            throw std::invalid_argument("VectorField: component dimension mismatch");
        if (!c.lambda_free())
            throw std::invalid_argument("VectorField: components must be lambda-free");
    }
}

VectorField VectorField::zero(int n)
{
    return VectorField(std::vector<CoeffPoly>(n, CoeffPoly(n)));
}

VectorField VectorField::monomial(int n, int component, const MultiIndex& m)
{
    std::vector<CoeffPoly> comp(n, CoeffPoly(n));
    comp[component] = CoeffPoly::monomial(n, m, Scalar(1));
    return VectorField(std::move(comp));
}

CoeffPoly VectorField::divergence() const
{
    CoeffPoly d(dimension());
    for (int i = 0; i < dimension(); ++i) d += comp_[i].differentiate(i + 1);
    return d;
}

VectorField operator+(const VectorField& a, const VectorField& b)
{
    if (a.dimension() != b.dimension()) throw std::invalid_argument("VectorField: dimension mismatch");
    std::vector<CoeffPoly> comp;
    for (int i = 0; i < a.dimension(); ++i) comp.push_back(a.comp_[i] + b.comp_[i]);
    return VectorField(std::move(comp));
}

VectorField VectorField::scaled(const Rational& c) const
{
    std::vector<CoeffPoly> comp;
    for (const auto& v : comp_) comp.push_back(v.scaled(Scalar(c)));
    return VectorField(std::move(comp));
}

VectorField bracket(const VectorField& X, const VectorField& Y)
{
    int n = X.dimension();
    if (n != Y.dimension()) throw std::invalid_argument("bracket: dimension mismatch");
    std::vector<CoeffPoly> comp(n, CoeffPoly(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            comp[j] += X.component(i) * Y.component(j).differentiate(i + 1)
                     - Y.component(i) * X.component(j).differentiate(i + 1);
    return VectorField(std::move(comp));
}

// ---- Tensor12 ----

Tensor12::Tensor12(int n) : n_(n), comp_(n * n * n, CoeffPoly(n)) {}

const CoeffPoly& Tensor12::at(int k, int i, int j) const
{
    return comp_[(k * n_ + i) * n_ + j];
}

void Tensor12::set_sym(int k, int i, int j, const CoeffPoly& v)
{
    comp_[(k * n_ + i) * n_ + j] = v;
    comp_[(k * n_ + j) * n_ + i] = v;
}

bool Tensor12::is_zero() const
{
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

CoeffPoly Tensor12::trace(int i) const
{
    CoeffPoly t(n_);
    for (int k = 0; k < n_; ++k) t += at(k, i, k);
    return t;
}

Tensor12 operator-(const Tensor12& a, const Tensor12& b)
{
    if (a.n_ != b.n_) throw std::invalid_argument("Tensor12: dimension mismatch");
    Tensor12 r(a.n_);
    for (std::size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] = a.comp_[i] - b.comp_[i];
    return r;
}

// ---- operations ----

SymbolPoly lie_derivative_symbol(const VectorField& X, const SymbolPoly& P)
{
    int n = P.dimension();
    if (X.dimension() != n) throw std::invalid_argument("lie_derivative_symbol: dimension mismatch");
    SymbolPoly r(n);
    for (int i = 1; i <= n; ++i)
        r += SymbolPoly::constant(n, X.component(i - 1)) * P.dx(i);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            CoeffPoly dXj = X.component(j - 1).differentiate(i);
            if (dXj.is_zero()) continue;
            r -= SymbolPoly::monomial(n, MultiIndex::unit(n, j - 1), dXj) * P.dxi(i);
        }
    return r;
}

SymbolPoly div_operator(const SymbolPoly& a)
{
    SymbolPoly r(a.dimension());
    for (int j = 1; j <= a.dimension(); ++j) r += a.dx(j).dxi(j);
    return r;
}

SymbolPoly divergence(const SymbolPoly& a, int m)
{
    if (!a.is_homogeneous()) throw std::invalid_argument("divergence: inhomogeneous symbol");
    int k = a.degree();
    if (k < 0) return a;
    if (m > k) throw std::invalid_argument("divergence: m > degree");
    SymbolPoly r = a;
    for (int i = 0; i < m; ++i) r = div_operator(r);
    return r.scaled(Scalar(Rational(factorial(k - m), factorial(k))));
}

Tensor12 sym_differential_squared(const VectorField& X)
{
    int n = X.dimension();
    Tensor12 T(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                T.set_sym(k, i, j, X.component(k).differentiate(i + 1).differentiate(j + 1));
    return T;
}

SymbolPoly contract_12(const Tensor12& T, const SymbolPoly& a)
{
    int n = a.dimension();
    if (T.dimension() != n) throw std::invalid_argument("contract_12: dimension mismatch");
    if (!a.is_homogeneous()) throw std::invalid_argument("contract_12: inhomogeneous symbol");
    int k = a.degree();
    if (k < 2) throw std::invalid_argument("contract_12: degree < 2");
    SymbolPoly r(n);
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (T.at(m, i, j).is_zero()) continue;
                SymbolPoly d = a.dxi(i + 1).dxi(j + 1);
                r += SymbolPoly::monomial(n, MultiIndex::unit(n, m), T.at(m, i, j)) * d;
            }
    return r.scaled(Scalar(Rational(1, Integer(k) * (k - 1))));
}

SymbolPoly poisson_bracket(const SymbolPoly& F, const SymbolPoly& G)
{
    int n = F.dimension();
    if (G.dimension() != n) throw std::invalid_argument("poisson_bracket: dimension mismatch");
    SymbolPoly r(n);
    for (int i = 1; i <= n; ++i)
        r += F.dxi(i) * G.dx(i) - F.dx(i) * G.dxi(i);
    return r;
}

Tensor12 lie_derivative_tensor12(const VectorField& X, const Tensor12& T)
{
    int n = T.dimension();
    if (X.dimension() != n) throw std::invalid_argument("lie_derivative_tensor12: dimension mismatch");
    Tensor12 R(n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                CoeffPoly v(n);
                for (int m = 0; m < n; ++m) {
                    v += X.component(m) * T.at(k, i, j).differentiate(m + 1);
                    v -= X.component(k).differentiate(m + 1) * T.at(m, i, j);
                    v += X.component(m).differentiate(i + 1) * T.at(k, m, j);
                    v += X.component(m).differentiate(j + 1) * T.at(k, i, m);
                }
                R.set_sym(k, i, j, v);
            }
    return R;
}

} // namespace projsym
