#include "ruin/formula.hpp"

namespace ruin {

RationalFormula::RationalFormula(MultiPoly numerator, int denominator_power)
    : numerator_(std::move(numerator)), denom_power_(denominator_power) {
    if (denom_power_ < 0) throw DomainError("negative denominator power");
    if (numerator_.is_zero()) {
        denom_power_ = 0;
        return;
    }
    while (denom_power_ > 0) {
        auto quotient = numerator_.divide_by_variable_sum();
        if (!quotient) break;
        numerator_ = std::move(*quotient);
        --denom_power_;
    }
}

RationalFormula operator+(const RationalFormula& a, const RationalFormula& b) {
    if (a.nvars() != b.nvars()) throw ShapeError("variable-count mismatch");
    int k = std::max(a.denom_power_, b.denom_power_);
    MultiPoly sum_pow_a = MultiPoly::variable_sum(a.nvars()).pow(k - a.denom_power_);
    MultiPoly sum_pow_b = MultiPoly::variable_sum(a.nvars()).pow(k - b.denom_power_);
    return {a.numerator_ * sum_pow_a + b.numerator_ * sum_pow_b, k};
}

RationalFormula operator-(const RationalFormula& a, const RationalFormula& b) {
    return a + (-b);
}

RationalFormula operator*(const RationalFormula& a, const RationalFormula& b) {
    if (a.nvars() != b.nvars()) throw ShapeError("variable-count mismatch");
    return {a.numerator_ * b.numerator_, a.denom_power_ + b.denom_power_};
}

RationalFormula operator*(const BigRational& s, const RationalFormula& f) {
    return {s * f.numerator_, f.denom_power_};
}

RationalFormula RationalFormula::pow(int k) const {
    if (k < 0) throw DomainError("negative formula power");
    return {numerator_.pow(k), denom_power_ * k};
}

BigRational RationalFormula::evaluate(std::span<const BigRational> point) const {
    BigRational num = numerator_.evaluate(point);
    if (denom_power_ == 0) return num;
    BigRational total(0);
    for (const auto& x : point) total += x;
    if (total.is_zero()) throw EvaluationError("denominator vanishes at evaluation point");
    BigRational den(1);
    for (int i = 0; i < denom_power_; ++i) den *= total;
    return num / den;
}

LeadingTerm leading_univariate(const RationalFormula& f) {
    if (f.is_zero()) throw DomainError("leading term of the zero formula is undefined");
    auto univariate = f.numerator().collapse_to_univariate();
    if (univariate.empty())
        throw DomainError("formula vanishes identically at equal capitals");
    auto top = univariate.rbegin();
    int degree = top->first;
    BigRational coeff = top->second;

    // Denominator is (nvars * a)^k.
    BigRational scale(1);
    for (int i = 0; i < f.denominator_power(); ++i) scale *= BigRational(f.nvars());
    return {degree - f.denominator_power(), coeff / scale};
}

}  // namespace ruin
