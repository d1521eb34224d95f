#pragma once

#include <span>

#include "ruin/multipoly.hpp"

namespace ruin {

/// Polynomial numerator over the denominator (A+B+C)^k, or (A+B)^k for
/// two variables. Canonical: while the variable sum divides the numerator
/// and k > 0, the common factor is cancelled. Two-player formulas carry
/// k = 0 throughout the pipeline.
class RationalFormula {
public:
    RationalFormula(MultiPoly numerator, int denominator_power);

    static RationalFormula zero(int nvars) { return {MultiPoly(nvars), 0}; }
    static RationalFormula constant(int nvars, BigRational value) {
        return {MultiPoly::constant(nvars, std::move(value)), 0};
    }

    int nvars() const { return numerator_.nvars(); }
    bool is_zero() const { return numerator_.is_zero(); }
    const MultiPoly& numerator() const { return numerator_; }
    int denominator_power() const { return denom_power_; }

    RationalFormula operator-() const { return {-numerator_, denom_power_}; }
    friend RationalFormula operator+(const RationalFormula& a, const RationalFormula& b);
    friend RationalFormula operator-(const RationalFormula& a, const RationalFormula& b);
    friend RationalFormula operator*(const RationalFormula& a, const RationalFormula& b);
    friend RationalFormula operator*(const BigRational& s, const RationalFormula& f);

    RationalFormula pow(int k) const;

    friend bool operator==(const RationalFormula& a, const RationalFormula& b) {
        return a.denom_power_ == b.denom_power_ && a.numerator_ == b.numerator_;
    }

    /// Exact value numerator(point) / (sum of point)^k.
    BigRational evaluate(std::span<const BigRational> point) const;

private:
    MultiPoly numerator_;
    int denom_power_;
};

struct LeadingTerm {
    int degree;
    BigRational coefficient;
};

/// Substitutes every variable by one symbol a (equal capitals), cancels
/// the denominator (2a or 3a)^k, and returns the dominant term.
LeadingTerm leading_univariate(const RationalFormula& f);

}  // namespace ruin
