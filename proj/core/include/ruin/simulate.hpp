#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ruin/rational.hpp"

namespace ruin {

/// SplitMix64 (Vigna 2015): 64-bit state advanced by the golden gamma,
/// output through the Stafford mix13 finalizer. Fixed for the lifetime
/// of the artifact; all arithmetic is wrapping uint64, so streams are
/// bit-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, n) by rejection below the largest multiple
    /// of n that fits in 64 bits.
    std::uint64_t uniform_below(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// The splitmix64 output finalizer as a standalone hash.
std::uint64_t mix64(std::uint64_t x);

/// Substream for one trial: SplitMix64 seeded with
/// mix64(seed + mix64(trial + 1)). Deterministic in (seed, trial).
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial);

enum class StopRule { first_ruin, last_survivor };

const char* to_string(StopRule rule);

struct GameConfig {
    std::vector<int> capitals;  // all >= 1, at least two players
    StopRule stop_rule = StopRule::first_ruin;

    void validate() const;
};

struct GameOutcome {
    long long duration = 0;
    int first_ruined = -1;
    std::optional<int> winner;  // resolved only when the pot is decided
};

/// Plays one game. Each round draws one ordered (giver, receiver) pair
/// uniformly among the active players (m active players give m(m-1)
/// pairs, giver-major). first-ruin stops at the first zero capital;
/// last-survivor drops ruined players and continues to one.
GameOutcome simulate_duration(const GameConfig& config, SplitMix64& gen);

/// Monte Carlo aggregate. Accumulation is exact (integer power sums);
/// decimals are rendered only at the end, so identical inputs reproduce
/// identical statistics on any platform.
struct TrialStats {
    long long trials = 0;
    std::string sample_mean;
    std::vector<std::string> sample_central_moments;  // orders 2..max_moment_order
    std::string standard_error_of_mean;
    std::uint64_t seed = 0;
    StopRule stop_rule = StopRule::first_ruin;

    // Exact counterparts of the decimal fields, for exact gates.
    BigRational mean_exact;
    std::vector<BigRational> central_exact;
    BigRational se_mean_squared_exact;
};

TrialStats run_trials(const GameConfig& config, long long trials, std::uint64_t seed,
                      int max_moment_order = 2);

/// Expected duration until only one of k players survives: the sum of
/// pairwise capital products.
BigRational ross_expectation(const std::vector<int>& capitals);

}  // namespace ruin
