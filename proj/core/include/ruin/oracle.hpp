#pragma once

#include <map>
#include <vector>

#include "ruin/rational.hpp"

namespace ruin {

/// Interior of the finite capital chain: every capital >= 1, total
/// conserved. Absorbing states (a zero coordinate) are excluded but
/// reachable through transfers.
struct StateSpace {
    int players;
    int total;
    std::vector<std::vector<int>> interior;  // lexicographic order
    std::map<std::vector<int>, int> index;
};

StateSpace enumerate_interior_states(int players, int total);

struct OracleResult {
    std::vector<int> capitals;
    /// Exact binomial moments of the duration, orders 0..I (order 0 is 1).
    std::vector<BigRational> binomial_moments;
    /// Exact probability, per player, of being the first to reach zero.
    std::vector<BigRational> first_ruin_probabilities;
};

/// Solves the per-order interior linear systems exactly. One elimination
/// of the interior matrix backs every order and the ruin probabilities.
OracleResult oracle_binomial_moments(const std::vector<int>& capitals, int max_order);

std::vector<BigRational> oracle_first_ruin_probabilities(const std::vector<int>& capitals);

}  // namespace ruin
