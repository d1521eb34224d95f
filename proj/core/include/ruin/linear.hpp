#pragma once

#include <optional>
#include <vector>

#include "ruin/rational.hpp"

namespace ruin {

using Matrix = std::vector<std::vector<BigRational>>;

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolutionReport {
    /// Present iff the system is consistent. For underdetermined systems
    /// this is the particular solution with free unknowns set to zero.
    std::optional<std::vector<BigRational>> solution;
    int rank = 0;
    SolveStatus status = SolveStatus::inconsistent;
};

/// Exact Gaussian elimination over the rationals. Pivots on the first
/// nonzero entry in column order, normalizing pivots to 1. Inconsistency
/// is reported through the status, never thrown.
SolutionReport solve_exact_linear(const Matrix& matrix, const std::vector<BigRational>& rhs);

/// LU factorization of a square invertible rational matrix, so one
/// elimination can back several right-hand sides.
class ExactLU {
public:
    explicit ExactLU(Matrix square);

    int size() const { return n_; }
    std::vector<BigRational> solve(const std::vector<BigRational>& rhs) const;

private:
    int n_;
    Matrix lu_;              // L below the diagonal (unit diagonal), U on and above
    std::vector<int> perm_;  // row permutation applied before factoring
};

}  // namespace ruin
