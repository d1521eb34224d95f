#include "ruin/linear.hpp"

#include <utility>

namespace ruin {

SolutionReport solve_exact_linear(const Matrix& matrix, const std::vector<BigRational>& rhs) {
    const std::size_t nrows = matrix.size();
    if (rhs.size() != nrows) throw ShapeError("rhs length must equal row count");
    const std::size_t ncols = nrows == 0 ? 0 : matrix[0].size();
    for (const auto& row : matrix)
        if (row.size() != ncols) throw ShapeError("matrix must be rectangular");

    Matrix a = matrix;
    std::vector<BigRational> b = rhs;

    std::vector<std::size_t> pivot_row_of_col(ncols, static_cast<std::size_t>(-1));
    std::size_t pivot_row = 0;
    int rank = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < nrows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < nrows && a[sel][col].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(a[sel], a[pivot_row]);
        std::swap(b[sel], b[pivot_row]);

        BigRational inv = BigRational(1) / a[pivot_row][col];
        for (std::size_t j = col; j < ncols; ++j) a[pivot_row][j] *= inv;
        b[pivot_row] *= inv;

        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == pivot_row || a[r][col].is_zero()) continue;
            BigRational factor = a[r][col];
            for (std::size_t j = col; j < ncols; ++j) a[r][j] -= factor * a[pivot_row][j];
            b[r] -= factor * b[pivot_row];
        }
        pivot_row_of_col[col] = pivot_row;
        ++pivot_row;
        ++rank;
    }

    SolutionReport report;
    report.rank = rank;

    for (std::size_t r = pivot_row; r < nrows; ++r) {
        if (!b[r].is_zero()) {
            report.status = SolveStatus::inconsistent;
            return report;
        }
    }

    std::vector<BigRational> solution(ncols, BigRational(0));
    for (std::size_t col = 0; col < ncols; ++col) {
        if (pivot_row_of_col[col] != static_cast<std::size_t>(-1))
            solution[col] = b[pivot_row_of_col[col]];
    }
    report.solution = std::move(solution);
    report.status = (rank == static_cast<int>(ncols)) ? SolveStatus::unique
                                                      : SolveStatus::underdetermined;
    return report;
}

ExactLU::ExactLU(Matrix square) : n_(static_cast<int>(square.size())), lu_(std::move(square)) {
    for (const auto& row : lu_)
        if (static_cast<int>(row.size()) != n_) throw ShapeError("LU input must be square");

    perm_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) perm_[static_cast<std::size_t>(i)] = i;

    for (int col = 0; col < n_; ++col) {
        int sel = col;
        while (sel < n_ && lu_[static_cast<std::size_t>(sel)][static_cast<std::size_t>(col)].is_zero())
            ++sel;
        if (sel == n_) throw DomainError("singular matrix in LU factorization");
        std::swap(lu_[static_cast<std::size_t>(sel)], lu_[static_cast<std::size_t>(col)]);
        std::swap(perm_[static_cast<std::size_t>(sel)], perm_[static_cast<std::size_t>(col)]);

        const BigRational& pivot = lu_[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int r = col + 1; r < n_; ++r) {
            auto& row = lu_[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)].is_zero()) continue;
            BigRational mult = row[static_cast<std::size_t>(col)] / pivot;
            row[static_cast<std::size_t>(col)] = mult;
            for (int j = col + 1; j < n_; ++j)
                row[static_cast<std::size_t>(j)] -=
                    mult * lu_[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
}

std::vector<BigRational> ExactLU::solve(const std::vector<BigRational>& rhs) const {
    if (static_cast<int>(rhs.size()) != n_) throw ShapeError("rhs length must equal matrix size");
    std::vector<BigRational> y(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        BigRational v = rhs[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])];
        for (int j = 0; j < i; ++j)
            v -= lu_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(j)];
        y[static_cast<std::size_t>(i)] = v;
    }
    std::vector<BigRational> x(static_cast<std::size_t>(n_));
    for (int i = n_ - 1; i >= 0; --i) {
        BigRational v = y[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n_; ++j)
            v -= lu_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = v / lu_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    }
    return x;
}

}  // namespace ruin
