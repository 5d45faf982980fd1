#include "projsym/scalar.hpp"

#include <sstream>

namespace projsym {

void Scalar::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Scalar::lambda() { return monomial(1, 1); }

Scalar Scalar::monomial(const Rational& c, int power)
{
    Scalar s;
    if (c == 0) return s;
    s.coeffs_.assign(power + 1, Rational(0));
    s.coeffs_[power] = c;
    return s;
}

Rational Scalar::coeff(int power) const
{
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[power];
}

Rational Scalar::constant_value() const
{
    if (!is_constant()) throw std::domain_error("Scalar: not a constant: " + str());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b)
{
    Scalar r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Rational Scalar::eval(const Rational& value) const
{
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * value + *it;
    return r;
}

Scalar Scalar::substitute(const Scalar& value) const
{
    Scalar r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * value + Scalar(*it);
    return r;
}

std::optional<Scalar> Scalar::divide_exact(const Scalar& d) const
{
    if (d.is_zero()) throw std::domain_error("Scalar: division by zero");
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(coeffs_.size(), Rational(0));
    int dd = d.degree();
    Rational lead = d.coeffs_.back();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / lead;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return Scalar(std::move(quot));
}

std::string Scalar::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        Rational c = coeffs_[p];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Rational a = boost::multiprecision::abs(c);
        if (a != 1 || p == 0) os << to_string(a);
        if (p > 0) {
            if (a != 1) os << "*";
            os << "l";
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

Scalar binom_poly(const Scalar& t, int m)
{
    if (m < 0) throw std::invalid_argument("binom_poly: m < 0");
    Scalar r(1);
    for (int j = 0; j < m; ++j) r *= t - Scalar(j);
    return r * Scalar(Rational(1, factorial(m)));
}

Scalar bernoulli(int s)
{
    // B_m fixed by B_0 = 1 and sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1,
    // then B_s(x) = sum binom(s, j) B_j x^{s-j}.
    if (s < 0) throw std::invalid_argument("bernoulli: s < 0");
    std::vector<Rational> B(s + 1);
    B[0] = 1;
    for (int m = 1; m <= s; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j) acc += binom(m + 1, j) * B[j];
        B[m] = -acc / binom(m + 1, m);
    }
    std::vector<Rational> coeffs(s + 1, Rational(0));
    for (int j = 0; j <= s; ++j) coeffs[s - j] = binom(s, j) * B[j];
    return Scalar(std::move(coeffs));
}

} // namespace projsym
