#pragma once

#include "fvh/rational.hpp"
#include "fvh/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fvh {

template <class F> struct LinearSolveReport {
    std::size_t rank = 0;
    bool consistent = true;
    bool unique = false;           // rank == cols and consistent
    std::vector<F> solution;       // valid iff unique
};

// Exact Gaussian elimination over a field F. Deterministic: the pivot is the
// first row with a nonzero entry in the current column. Every returned
// solution satisfies A x = b exactly (verified before returning).
template <class F>
LinearSolveReport<F> solve_exact_field(std::vector<std::vector<F>> A, std::vector<F> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_exact: rhs size mismatch");
    for (auto &r : A)
        if (r.size() != cols) throw std::invalid_argument("solve_exact: ragged matrix");

    std::vector<std::vector<F>> A0 = A; // keep originals for the final check
    std::vector<F> b0 = b;

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && scalar_is_zero(A[p][c])) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        F inv = F(1) / A[r][c];
        for (std::size_t j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || scalar_is_zero(A[i][c])) continue;
            F f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolveReport<F> rep;
    rep.rank = r;
    for (std::size_t i = r; i < rows; ++i)
        if (!scalar_is_zero(b[i])) rep.consistent = false;
    rep.unique = rep.consistent && rep.rank == cols;
    if (rep.unique) {
        rep.solution.assign(cols, F(0));
        for (std::size_t i = 0; i < r; ++i) rep.solution[pivot_col[i]] = b[i];
        for (std::size_t i = 0; i < rows; ++i) {
            F acc(0);
            for (std::size_t j = 0; j < cols; ++j) acc = acc + A0[i][j] * rep.solution[j];
            if (!scalar_is_zero(acc - b0[i]))
                throw std::logic_error("solve_exact: residual check failed");
        }
    }
    return rep;
}

// The concrete rational linear system used by the interpolation pipeline.
struct LinearSystem {
    std::vector<std::vector<Rat>> matrix;
    std::vector<Rat> rhs;
};

inline LinearSolveReport<Rat> solve_exact(const LinearSystem &sys) {
    return solve_exact_field<Rat>(sys.matrix, sys.rhs);
}

} // namespace fvh
