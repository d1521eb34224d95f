#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ruin/formula.hpp"
#include "ruin/stirling.hpp"

namespace ruin {

enum class MomentKind { binomial, raw, central };

const char* to_string(MomentKind kind);
MomentKind moment_kind_from_string(const std::string& text);

/// Ordered collection of moment formulas of one kind. Binomial moments
/// are indexed from order 0 (the constant 1); raw and central moments
/// from order 1. Central sets carry the mean alongside.
struct MomentSet {
    int players = 2;
    MomentKind kind = MomentKind::binomial;
    std::vector<RationalFormula> formulas;
    std::optional<RationalFormula> mean;

    int start_order() const { return kind == MomentKind::binomial ? 0 : 1; }
    int max_order() const { return start_order() + static_cast<int>(formulas.size()) - 1; }

    const RationalFormula& at(int order) const;
};

/// E[D^i] = sum_j j! S(i,j) E[binom(D,j)] for i = 1..I.
MomentSet binomial_to_raw(const MomentSet& binomial);

/// m_i = sum_j binom(i,j) (-mu)^(i-j) E[D^j] with mu = E[D]; m_1 is
/// identically zero and the mean is stored alongside.
MomentSet raw_to_central(const MomentSet& raw);

/// Limit of the scaled moment m_i / m_2^(i/2) as equal capitals grow.
/// Carried exactly: squared_value = c_i^2 / c_2^i from the leading
/// equal-capital coefficients. Even orders have a rational limit, which
/// is detected and drives the decimal rendering.
struct ExactScaledLimit {
    int order;
    BigRational squared_value;
    std::optional<BigRational> exact_value;
    std::string decimal;
};

ExactScaledLimit scaled_limit(const MomentSet& central, int order, int sig_digits = 20);

}  // namespace ruin
