#pragma once

#include <vector>

#include "projsym/rational.hpp"

namespace projsym {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

struct LinearSolution {
    bool consistent = false;
    RationalVector particular;            // one solution of A x = b (when consistent)
    std::vector<RationalVector> nullspace; // basis of A x = 0
    int rank = 0;
};

// Exact Gauss-Jordan elimination over Q. A is m x cols (rows may be ragged-checked).
LinearSolution gauss_solve(RationalMatrix A, RationalVector b);

} // namespace projsym
