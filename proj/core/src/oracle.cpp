#include "ruin/oracle.hpp"

#include <numeric>

#include "ruin/linear.hpp"

namespace ruin {

namespace {

std::vector<std::vector<int>> transfer_vectors(int players) {
    std::vector<std::vector<int>> transfers;
    for (int giver = 0; giver < players; ++giver) {
        for (int receiver = 0; receiver < players; ++receiver) {
            if (giver == receiver) continue;
            std::vector<int> t(static_cast<std::size_t>(players), 0);
            t[static_cast<std::size_t>(giver)] = -1;
            t[static_cast<std::size_t>(receiver)] = 1;
            transfers.push_back(std::move(t));
        }
    }
    return transfers;
}

void validate_capitals(const std::vector<int>& capitals) {
    if (capitals.size() != 2 && capitals.size() != 3)
        throw DomainError("oracle supports 2 or 3 players");
    for (int c : capitals)
        if (c < 1) throw DomainError("capitals must be positive");
}

struct InteriorChain {
    StateSpace states;
    std::vector<std::vector<int>> transfers;
    BigRational weight;
    ExactLU lu;

    explicit InteriorChain(const std::vector<int>& capitals)
        : states(enumerate_interior_states(static_cast<int>(capitals.size()),
                                           std::accumulate(capitals.begin(), capitals.end(), 0))),
          transfers(transfer_vectors(states.players)),
          weight(1, static_cast<long>(transfers.size())),
          lu(build_matrix()) {}

    Matrix build_matrix() const {
        const std::size_t n = states.interior.size();
        Matrix m(n, std::vector<BigRational>(n, BigRational(0)));
        for (std::size_t s = 0; s < n; ++s) {
            m[s][s] = BigRational(1);
            for (const auto& t : transfers) {
                std::vector<int> next = states.interior[s];
                for (std::size_t v = 0; v < next.size(); ++v) next[v] += t[v];
                auto it = states.index.find(next);
                if (it != states.index.end())
                    m[s][static_cast<std::size_t>(it->second)] -= weight;
            }
        }
        return m;
    }

    bool is_absorbing(const std::vector<int>& state) const {
        for (int c : state)
            if (c == 0) return true;
        return false;
    }
};

}  // namespace

StateSpace enumerate_interior_states(int players, int total) {
    if (players != 2 && players != 3) throw DomainError("state space supports 2 or 3 players");
    if (total < players)
        throw DomainError("total capital " + std::to_string(total) + " leaves no interior state");
    StateSpace space;
    space.players = players;
    space.total = total;
    if (players == 2) {
        for (int a = 1; a <= total - 1; ++a) space.interior.push_back({a, total - a});
    } else {
        for (int a = 1; a <= total - 2; ++a)
            for (int b = 1; a + b <= total - 1; ++b) space.interior.push_back({a, b, total - a - b});
    }
    for (std::size_t i = 0; i < space.interior.size(); ++i)
        space.index.emplace(space.interior[i], static_cast<int>(i));
    return space;
}

OracleResult oracle_binomial_moments(const std::vector<int>& capitals, int max_order) {
    validate_capitals(capitals);
    if (max_order < 0) throw DomainError("negative maximum order");

    InteriorChain chain(capitals);
    const std::size_t n = chain.states.interior.size();
    const std::size_t start = static_cast<std::size_t>(chain.states.index.at(capitals));

    OracleResult result;
    result.capitals = capitals;
    result.binomial_moments.push_back(BigRational(1));

    // f_i on the interior; f_0 is 1 everywhere, including absorbing states.
    std::vector<BigRational> prev(n, BigRational(1));
    for (int order = 1; order <= max_order; ++order) {
        std::vector<BigRational> rhs(n, BigRational(0));
        for (std::size_t s = 0; s < n; ++s) {
            BigRational acc(0);
            for (const auto& t : chain.transfers) {
                std::vector<int> next = chain.states.interior[s];
                for (std::size_t v = 0; v < next.size(); ++v) next[v] += t[v];
                if (chain.is_absorbing(next)) {
                    if (order == 1) acc += BigRational(1);  // f_0 = 1 on the boundary
                } else {
                    acc += prev[static_cast<std::size_t>(chain.states.index.at(next))];
                }
            }
            rhs[s] = chain.weight * acc;
        }
        std::vector<BigRational> current = chain.lu.solve(rhs);
        result.binomial_moments.push_back(current[start]);
        prev = std::move(current);
    }

    // First-ruin probabilities share the same factorization.
    for (int player = 0; player < chain.states.players; ++player) {
        std::vector<BigRational> rhs(n, BigRational(0));
        for (std::size_t s = 0; s < n; ++s) {
            int hits = 0;
            for (const auto& t : chain.transfers) {
                std::vector<int> next = chain.states.interior[s];
                for (std::size_t v = 0; v < next.size(); ++v) next[v] += t[v];
                if (chain.is_absorbing(next) && next[static_cast<std::size_t>(player)] == 0) ++hits;
            }
            rhs[s] = BigRational(hits) * chain.weight;
        }
        std::vector<BigRational> h = chain.lu.solve(rhs);
        result.first_ruin_probabilities.push_back(h[start]);
    }
    return result;
}

std::vector<BigRational> oracle_first_ruin_probabilities(const std::vector<int>& capitals) {
    return oracle_binomial_moments(capitals, 0).first_ruin_probabilities;
}

}  // namespace ruin
