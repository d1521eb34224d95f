#include "ruin/stirling.hpp"

namespace ruin {

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(int n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

StirlingTable::StirlingTable(int capacity) : capacity_(capacity) {
    if (capacity < 0) throw DomainError("negative table capacity");
    rows_.resize(static_cast<std::size_t>(capacity) + 1);
    for (int i = 0; i <= capacity; ++i) {
        auto& row = rows_[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(i) + 1, BigInt(0));
        for (int j = 0; j <= i; ++j) {
            if (i == 0 && j == 0) {
                row[0] = 1;
            } else if (j == 0) {
                row[0] = 0;
            } else {
                const auto& prev = rows_[static_cast<std::size_t>(i - 1)];
                BigInt above = (j <= i - 1) ? prev[static_cast<std::size_t>(j)] : BigInt(0);
                row[static_cast<std::size_t>(j)] = j * above + prev[static_cast<std::size_t>(j - 1)];
            }
        }
    }
}

const BigInt& StirlingTable::value(int i, int j) const {
    if (i < 0 || i > capacity_ || j < 0 || j > i)
        throw DomainError("Stirling index out of range");
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

BigInt stirling2(int i, int j) {
    if (i < 0 || j < 0 || j > i) throw DomainError("stirling2 requires 0 <= j <= i");
    StirlingTable table(i);
    return table.value(i, j);
}

}  // namespace ruin
