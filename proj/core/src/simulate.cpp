#include "ruin/simulate.hpp"

#include <cassert>
#include <numeric>

#include "ruin/decimal.hpp"
#include "ruin/stirling.hpp"

namespace ruin {

namespace {
constexpr int kStatDigits = 15;
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed + mix64(trial + 1)));
}

std::uint64_t SplitMix64::uniform_below(std::uint64_t n) {
    if (n == 0) throw DomainError("uniform_below(0)");
    const std::uint64_t zone = (UINT64_MAX / n) * n;
    std::uint64_t r = next();
    while (r >= zone) r = next();
    return r % n;
}

const char* to_string(StopRule rule) {
    return rule == StopRule::first_ruin ? "first-ruin" : "last-survivor";
}

void GameConfig::validate() const {
    if (capitals.size() < 2) throw DomainError("need at least two players");
    for (int c : capitals)
        if (c < 1) throw DomainError("capitals must be positive");
}

GameOutcome simulate_duration(const GameConfig& config, SplitMix64& gen) {
    std::vector<int> capital = config.capitals;
    std::vector<int> active(capital.size());
    std::iota(active.begin(), active.end(), 0);
#ifndef NDEBUG
    const long long total = std::accumulate(capital.begin(), capital.end(), 0LL);
#endif

    GameOutcome outcome;
    while (true) {
        const std::uint64_t m = active.size();
        const std::uint64_t pair = gen.uniform_below(m * (m - 1));
        std::size_t giver_idx = static_cast<std::size_t>(pair / (m - 1));
        std::size_t receiver_idx = static_cast<std::size_t>(pair % (m - 1));
        if (receiver_idx >= giver_idx) ++receiver_idx;

        const int giver = active[giver_idx];
        const int receiver = active[receiver_idx];
        --capital[static_cast<std::size_t>(giver)];
        ++capital[static_cast<std::size_t>(receiver)];
        ++outcome.duration;
#ifndef NDEBUG
        assert(std::accumulate(capital.begin(), capital.end(), 0LL) == total);
#endif

        if (capital[static_cast<std::size_t>(giver)] > 0) continue;
        if (outcome.first_ruined < 0) outcome.first_ruined = giver;

        if (config.stop_rule == StopRule::first_ruin) {
            if (active.size() == 2) outcome.winner = receiver;
            return outcome;
        }
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(giver_idx));
        if (active.size() == 1) {
            outcome.winner = active[0];
            return outcome;
        }
    }
}

TrialStats run_trials(const GameConfig& config, long long trials, std::uint64_t seed,
                      int max_moment_order) {
    config.validate();
    if (trials < 1) throw DomainError("need at least one trial");
    if (max_moment_order < 2) max_moment_order = 2;

    // Exact power sums of the durations, orders 0..max_moment_order.
    std::vector<BigInt> power_sum(static_cast<std::size_t>(max_moment_order) + 1, BigInt(0));
    for (long long t = 0; t < trials; ++t) {
        SplitMix64 gen = trial_stream(seed, static_cast<std::uint64_t>(t));
        GameOutcome outcome = simulate_duration(config, gen);
        BigInt d(static_cast<long>(outcome.duration));
        BigInt p(1);
        for (int j = 0; j <= max_moment_order; ++j) {
            power_sum[static_cast<std::size_t>(j)] += p;
            p *= d;
        }
    }

    const BigRational n(static_cast<long>(trials));
    const BigRational mean = BigRational(power_sum[1]) / n;

    // Central moments from raw power sums: the whole reduction is rational.
    std::vector<BigRational> central(static_cast<std::size_t>(max_moment_order) + 1, BigRational(0));
    for (int k = 2; k <= max_moment_order; ++k) {
        BigRational acc(0);
        for (int j = 0; j <= k; ++j) {
            acc += BigRational(binomial(k, j)) * (-mean).powint(k - j) *
                   BigRational(power_sum[static_cast<std::size_t>(j)]);
        }
        central[static_cast<std::size_t>(k)] = acc / n;
    }

    TrialStats stats;
    stats.trials = trials;
    stats.seed = seed;
    stats.stop_rule = config.stop_rule;
    stats.mean_exact = mean;
    stats.sample_mean = render_decimal_trimmed(mean, kStatDigits);
    for (int k = 2; k <= max_moment_order; ++k) {
        stats.central_exact.push_back(central[static_cast<std::size_t>(k)]);
        stats.sample_central_moments.push_back(
            render_decimal_trimmed(central[static_cast<std::size_t>(k)], kStatDigits));
    }

    // SE^2 = s^2 / n with the Bessel-corrected sample variance.
    if (trials > 1) {
        BigRational s2 = central[2] * n / BigRational(static_cast<long>(trials - 1));
        stats.se_mean_squared_exact = s2 / n;
    } else {
        stats.se_mean_squared_exact = BigRational(0);
    }
    stats.standard_error_of_mean = render_sqrt_decimal(stats.se_mean_squared_exact, kStatDigits);
    return stats;
}

BigRational ross_expectation(const std::vector<int>& capitals) {
    if (capitals.size() < 2) throw DomainError("need at least two players");
    BigRational acc(0);
    for (std::size_t i = 0; i < capitals.size(); ++i) {
        if (capitals[i] < 1) throw DomainError("capitals must be positive");
        for (std::size_t j = i + 1; j < capitals.size(); ++j)
            acc += BigRational(static_cast<long>(capitals[i]) * capitals[j]);
    }
    return acc;
}

}  // namespace ruin
