#pragma once

#include <vector>

#include "projsym/rational.hpp"

namespace projsym {

// Exponent vector of fixed length n. Ordered graded-lexicographically so that
// map iteration gives the canonical serialization order.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(int n) : e_(n, 0) {}
    explicit MultiIndex(std::vector<int> e);

    static MultiIndex unit(int n, int axis);      // e_axis = 1

    int size() const { return static_cast<int>(e_.size()); }
    int order() const;                            // |alpha|
    int operator[](int i) const { return e_[i]; }
    int& operator[](int i) { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    MultiIndex plus(int axis, int delta = 1) const;
    bool contains(const MultiIndex& sub) const;   // sub <= this componentwise
    MultiIndex operator+(const MultiIndex& o) const;
    MultiIndex operator-(const MultiIndex& o) const; // requires contains(o)

    Integer factorial() const;                    // alpha!
    Rational binom(const MultiIndex& sub) const;  // prod binom(a_i, b_i)
    Integer orderings() const;                    // |alpha|! / alpha!

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }
    bool operator<(const MultiIndex& o) const;    // graded lex

private:
    std::vector<int> e_;
};

// All multi-indices of length n with |alpha| == degree (lex order within a grade).
std::vector<MultiIndex> indices_of_degree(int n, int degree);
// All multi-indices of length n with |alpha| <= degree, graded.
std::vector<MultiIndex> indices_up_to(int n, int degree);

} // namespace projsym
