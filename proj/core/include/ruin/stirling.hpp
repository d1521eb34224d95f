#pragma once

#include <vector>

#include "ruin/rational.hpp"

namespace ruin {

BigInt binomial(int n, int k);
BigInt factorial(int n);

/// Triangular table of Stirling numbers of the second kind S(i,j),
/// 0 <= j <= i <= capacity, filled by the standard recurrence
/// S(i,j) = j*S(i-1,j) + S(i-1,j-1).
class StirlingTable {
public:
    explicit StirlingTable(int capacity);

    int capacity() const { return capacity_; }
    const BigInt& value(int i, int j) const;

private:
    int capacity_;
    std::vector<std::vector<BigInt>> rows_;
};

/// S(i,j) without keeping a table around.
BigInt stirling2(int i, int j);

}  // namespace ruin
