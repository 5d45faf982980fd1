#include "projsym/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace projsym {

MultiIndex::MultiIndex(std::vector<int> e) : e_(std::move(e))
{
    for (int v : e_)
        if (v < 0) throw std::invalid_argument("MultiIndex: negative exponent");
}

MultiIndex MultiIndex::unit(int n, int axis)
{
    MultiIndex m(n);
    m.e_[axis] = 1;
    return m;
}

int MultiIndex::order() const { return std::accumulate(e_.begin(), e_.end(), 0); }

MultiIndex MultiIndex::plus(int axis, int delta) const
{
    MultiIndex m(*this);
    m.e_[axis] += delta;
    if (m.e_[axis] < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    return m;
}

bool MultiIndex::contains(const MultiIndex& sub) const
{
    for (int i = 0; i < size(); ++i)
        if (sub.e_[i] > e_[i]) return false;
    return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
    MultiIndex m(*this);
    for (int i = 0; i < size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const
{
    MultiIndex m(*this);
    for (int i = 0; i < size(); ++i) {
        m.e_[i] -= o.e_[i];
        if (m.e_[i] < 0) throw std::invalid_argument("MultiIndex: negative difference");
    }
    return m;
}

Integer MultiIndex::factorial() const
{
    Integer f = 1;
    for (int v : e_) f *= projsym::factorial(v);
    return f;
}

Rational MultiIndex::binom(const MultiIndex& sub) const
{
    Rational r = 1;
    for (int i = 0; i < size(); ++i) r *= projsym::binom(e_[i], sub.e_[i]);
    return r;
}

Integer MultiIndex::orderings() const
{
    return projsym::factorial(order()) / factorial();
}

bool MultiIndex::operator<(const MultiIndex& o) const
{
    int a = order(), b = o.order();
    if (a != b) return a < b;
    return e_ < o.e_;
}

std::vector<MultiIndex> indices_of_degree(int n, int degree)
{
    std::vector<MultiIndex> out;
    MultiIndex cur(n);
    // lexicographic walk
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            cur[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    if (n == 0) {
        if (degree == 0) out.push_back(cur);
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

std::vector<MultiIndex> indices_up_to(int n, int degree)
{
    std::vector<MultiIndex> out;
    for (int d = 0; d <= degree; ++d) {
        auto level = indices_of_degree(n, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace projsym
