#include "ruin/moments.hpp"

#include "ruin/decimal.hpp"

namespace ruin {

const char* to_string(MomentKind kind) {
    switch (kind) {
        case MomentKind::binomial: return "binomial";
        case MomentKind::raw: return "raw";
        case MomentKind::central: return "central";
    }
    return "?";
}

MomentKind moment_kind_from_string(const std::string& text) {
    if (text == "binomial") return MomentKind::binomial;
    if (text == "raw") return MomentKind::raw;
    if (text == "central") return MomentKind::central;
    throw DomainError("unknown moment kind: " + text);
}

const RationalFormula& MomentSet::at(int order) const {
    int idx = order - start_order();
    if (idx < 0 || idx >= static_cast<int>(formulas.size()))
        throw DomainError("moment order " + std::to_string(order) + " not present");
    return formulas[static_cast<std::size_t>(idx)];
}

MomentSet binomial_to_raw(const MomentSet& binomial) {
    if (binomial.kind != MomentKind::binomial)
        throw DomainError("binomial_to_raw requires a binomial moment set");
    if (binomial.formulas.empty())
        throw DomainError("incomplete input: binomial order 0 missing");
    const int max_order = binomial.max_order();
    StirlingTable stirling(max_order);

    MomentSet raw;
    raw.players = binomial.players;
    raw.kind = MomentKind::raw;
    for (int i = 1; i <= max_order; ++i) {
        RationalFormula acc = RationalFormula::zero(binomial.at(0).nvars());
        for (int j = 0; j <= i; ++j) {
            BigRational coeff(factorial(j) * stirling.value(i, j));
            if (coeff.is_zero()) continue;
            acc = acc + coeff * binomial.at(j);
        }
        raw.formulas.push_back(acc);
    }
    return raw;
}

MomentSet raw_to_central(const MomentSet& raw) {
    if (raw.kind != MomentKind::raw)
        throw DomainError("raw_to_central requires a raw moment set");
    if (raw.formulas.empty())
        throw DomainError("incomplete input: raw order 1 missing");
    const int max_order = raw.max_order();
    const int nvars = raw.at(1).nvars();
    const RationalFormula& mu = raw.at(1);

    MomentSet central;
    central.players = raw.players;
    central.kind = MomentKind::central;
    central.mean = mu;
    for (int i = 1; i <= max_order; ++i) {
        RationalFormula acc = RationalFormula::zero(nvars);
        for (int j = 0; j <= i; ++j) {
            RationalFormula term = (-mu).pow(i - j);
            term = BigRational(binomial(i, j)) * term;
            if (j > 0) term = term * raw.at(j);
            acc = acc + term;
        }
        central.formulas.push_back(acc);
    }
    return central;
}

ExactScaledLimit scaled_limit(const MomentSet& central, int order, int sig_digits) {
    if (central.kind != MomentKind::central)
        throw DomainError("scaled_limit requires central moments");
    if (order < 3) throw DomainError("scaled limits start at order 3");

    LeadingTerm variance = leading_univariate(central.at(2));
    LeadingTerm top = leading_univariate(central.at(order));
    if (variance.degree != 4)
        throw ShapeError("variance leading degree is " + std::to_string(variance.degree) +
                         ", expected 4");
    if (top.degree != 2 * order)
        throw ShapeError("order-" + std::to_string(order) + " leading degree is " +
                         std::to_string(top.degree) + ", expected " + std::to_string(2 * order));

    ExactScaledLimit limit;
    limit.order = order;
    BigRational c2_pow(1);
    for (int i = 0; i < order; ++i) c2_pow *= variance.coefficient;
    limit.squared_value = top.coefficient * top.coefficient / c2_pow;
    limit.exact_value = exact_sqrt(limit.squared_value);
    limit.decimal = render_sqrt_decimal(limit.squared_value, sig_digits);
    return limit;
}

}  // namespace ruin
