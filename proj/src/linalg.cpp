#include "projsym/linalg.hpp"

#include <stdexcept>

namespace projsym {

LinearSolution gauss_solve(RationalMatrix A, RationalVector b)
{
    const std::size_t rows = A.size();
    if (rows != b.size()) throw std::invalid_argument("gauss_solve: rows(A) != size(b)");
    std::size_t cols = rows == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != cols) throw std::invalid_argument("gauss_solve: ragged matrix");

    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && A[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[r]);
        std::swap(b[sel], b[r]);
        Rational inv = A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] /= inv;
        b[r] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }

    LinearSolution sol;
    sol.rank = static_cast<int>(r);
    sol.consistent = true;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) { sol.consistent = false; break; }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    if (sol.consistent) {
        sol.particular.assign(cols, Rational(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            sol.particular[pivot_col[i]] = b[i];
    }
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RationalVector v(cols, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -A[i][c];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

} // namespace projsym
