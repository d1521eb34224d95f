#include "ruin/ansatz.hpp"

#include <algorithm>
#include <set>

namespace ruin {

namespace {

/// Product of all variables: AB or ABC, the factor forced by the
/// boundary conditions.
MultiPoly variable_product(int nvars) {
    Monomial m{nvars, {1, 1, nvars == 3 ? 1 : 0}};
    return MultiPoly::from_term(m, BigRational(1));
}

/// All monomials of total degree <= max_degree, canonical order.
std::vector<Monomial> monomials_up_to(int nvars, int max_degree) {
    std::vector<Monomial> out;
    if (nvars == 2) {
        for (int i = 0; i <= max_degree; ++i)
            for (int j = 0; i + j <= max_degree; ++j)
                out.push_back(Monomial{2, {i, j, 0}});
    } else {
        for (int i = 0; i <= max_degree; ++i)
            for (int j = 0; i + j <= max_degree; ++j)
                for (int l = 0; i + j + l <= max_degree; ++l)
                    out.push_back(Monomial{3, {i, j, l}});
    }
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

/// g - weight * sum over transfers of g(shifted).
MultiPoly transfer_deficit(const RecurrenceSpec& spec, const MultiPoly& g) {
    MultiPoly acc = g;
    for (const auto& t : spec.transfers) {
        std::span<const int> offsets(t.data(), static_cast<std::size_t>(spec.players));
        acc -= spec.weight * g.shift_substitute(offsets);
    }
    return acc;
}

/// weight * sum over transfers of g(shifted).
MultiPoly transfer_average(const RecurrenceSpec& spec, const MultiPoly& g) {
    MultiPoly acc(g.nvars());
    for (const auto& t : spec.transfers) {
        std::span<const int> offsets(t.data(), static_cast<std::size_t>(spec.players));
        acc += spec.weight * g.shift_substitute(offsets);
    }
    return acc;
}

int target_denominator_power(int players) { return players == 3 ? 1 : 0; }

/// Orbit representatives and expanded orbit sums of the basis monomials
/// under all variable permutations.
std::vector<MultiPoly> symmetric_basis_polys(int nvars, const std::vector<Monomial>& monomials) {
    std::set<std::array<int, kMaxVars>> seen;
    std::vector<MultiPoly> orbit_sums;
    for (const auto& m : monomials) {
        std::array<int, kMaxVars> key = m.exp;
        std::sort(key.begin(), key.begin() + nvars, std::greater<int>());
        if (!seen.insert(key).second) continue;
        std::array<int, kMaxVars> perm = key;
        std::sort(perm.begin(), perm.begin() + nvars);
        MultiPoly sum(nvars);
        do {
            sum.add_term(Monomial{nvars, perm}, BigRational(1));
        } while (std::next_permutation(perm.begin(), perm.begin() + nvars));
        orbit_sums.push_back(sum);
    }
    return orbit_sums;
}

}  // namespace

RecurrenceSpec RecurrenceSpec::for_players(int players) {
    if (players != 2 && players != 3)
        throw UnsupportedError("the polynomial ansatz is only known to close for 2 or 3 players");
    RecurrenceSpec spec;
    spec.players = players;
    for (int giver = 0; giver < players; ++giver) {
        for (int receiver = 0; receiver < players; ++receiver) {
            if (giver == receiver) continue;
            std::array<int, kMaxVars> t{0, 0, 0};
            t[static_cast<std::size_t>(giver)] = -1;
            t[static_cast<std::size_t>(receiver)] = 1;
            spec.transfers.push_back(t);
        }
    }
    spec.weight = BigRational(1, static_cast<long>(spec.transfers.size()));
    return spec;
}

AnsatzBasis build_basis(int players, int order) {
    if (players != 2 && players != 3)
        throw UnsupportedError("the polynomial ansatz is only known to close for 2 or 3 players");
    AnsatzBasis basis;
    basis.players = players;
    basis.order = order;
    if (order == 0) return basis;
    if (order < 0) throw DomainError("negative derivation order");
    basis.monomials = monomials_up_to(players, 2 * order - 2);
    return basis;
}

AssembledSystem assemble_recurrence_system(const RecurrenceSpec& spec, const AnsatzBasis& basis,
                                           const RationalFormula& f_prev) {
    if (f_prev.nvars() != spec.players) throw ShapeError("variable-count mismatch");
    const int nvars = spec.players;
    const int k_target = target_denominator_power(nvars);
    if (f_prev.denominator_power() > k_target)
        throw ShapeError("previous-order denominator power exceeds the ansatz shape");

    // Column polynomials: deficit of prodvars * basis monomial.
    const MultiPoly prod = variable_product(nvars);
    std::vector<MultiPoly> columns;
    columns.reserve(basis.monomials.size());
    for (const auto& m : basis.monomials)
        columns.push_back(transfer_deficit(spec, prod * MultiPoly::from_term(m, BigRational(1))));

    // Known side: weight * sum_t f_prev(shifted), cleared to the target
    // denominator power.
    MultiPoly known = transfer_average(spec, f_prev.numerator());
    known = known * MultiPoly::variable_sum(nvars).pow(k_target - f_prev.denominator_power());

    // One row per monomial in the union of supports, canonical order.
    std::set<Monomial, MonomialOrder> support;
    for (const auto& col : columns)
        for (const auto& [m, c] : col.terms()) support.insert(m);
    for (const auto& [m, c] : known.terms()) support.insert(m);

    AssembledSystem system;
    system.row_monomials.assign(support.begin(), support.end());
    system.matrix.reserve(system.row_monomials.size());
    system.rhs.reserve(system.row_monomials.size());
    for (const auto& m : system.row_monomials) {
        std::vector<BigRational> row;
        row.reserve(columns.size());
        for (const auto& col : columns) row.push_back(col.coeff(m));
        system.matrix.push_back(std::move(row));
        system.rhs.push_back(known.coeff(m));
    }
    return system;
}

MultiPoly verify_residual(const RecurrenceSpec& spec, const RationalFormula& f_i,
                          const RationalFormula& f_prev) {
    if (f_i.nvars() != spec.players || f_prev.nvars() != spec.players)
        throw ShapeError("variable-count mismatch");
    const int m = std::max(f_i.denominator_power(), f_prev.denominator_power());
    const MultiPoly sum = MultiPoly::variable_sum(spec.players);

    MultiPoly lhs = transfer_deficit(spec, f_i.numerator());
    lhs = lhs * sum.pow(m - f_i.denominator_power());
    MultiPoly rhs = transfer_average(spec, f_prev.numerator());
    rhs = rhs * sum.pow(m - f_prev.denominator_power());
    return lhs - rhs;
}

DerivationResult derive_binomial_moments(int players, int max_order,
                                         const DeriveOptions& options) {
    if (players != 2 && players != 3)
        throw UnsupportedError("the polynomial ansatz is only known to close for 2 or 3 players");
    if (max_order < 0) throw DomainError("negative maximum order");

    const RecurrenceSpec spec = RecurrenceSpec::for_players(players);
    const int k_target = target_denominator_power(players);
    const MultiPoly prod = variable_product(players);

    DerivationResult result;
    result.players = players;
    result.max_order = max_order;
    result.binomial_moments.players = players;
    result.binomial_moments.kind = MomentKind::binomial;
    result.binomial_moments.formulas.push_back(RationalFormula::constant(players, BigRational(1)));

    for (int order = 1; order <= max_order; ++order) {
        const RationalFormula& prev = result.binomial_moments.at(order - 1);
        AnsatzBasis basis = build_basis(players, order);

        // Optional compression: solve in the symmetric subspace, then
        // expand. The default path uses the full monomial basis.
        std::vector<MultiPoly> column_polys;
        AssembledSystem system;
        if (options.symmetric_basis) {
            column_polys = symmetric_basis_polys(players, basis.monomials);
            MultiPoly known = transfer_average(spec, prev.numerator());
            known = known * MultiPoly::variable_sum(players).pow(k_target - prev.denominator_power());
            std::set<Monomial, MonomialOrder> support;
            std::vector<MultiPoly> deficits;
            deficits.reserve(column_polys.size());
            for (const auto& q : column_polys) {
                deficits.push_back(transfer_deficit(spec, prod * q));
                for (const auto& [m, c] : deficits.back().terms()) support.insert(m);
            }
            for (const auto& [m, c] : known.terms()) support.insert(m);
            system.row_monomials.assign(support.begin(), support.end());
            for (const auto& m : system.row_monomials) {
                std::vector<BigRational> row;
                row.reserve(deficits.size());
                for (const auto& d : deficits) row.push_back(d.coeff(m));
                system.matrix.push_back(std::move(row));
                system.rhs.push_back(known.coeff(m));
            }
        } else {
            for (const auto& m : basis.monomials)
                column_polys.push_back(MultiPoly::from_term(m, BigRational(1)));
            system = assemble_recurrence_system(spec, basis, prev);
        }

        SolutionReport report = solve_exact_linear(system.matrix, system.rhs);
        if (report.status != SolveStatus::unique) {
            throw DerivationError(
                "order-" + std::to_string(order) + " ansatz system is " +
                    (report.status == SolveStatus::inconsistent ? "inconsistent" : "underdetermined"),
                order, std::move(report));
        }

        MultiPoly numerator(players);
        for (std::size_t j = 0; j < column_polys.size(); ++j) {
            const BigRational& c = (*report.solution)[j];
            if (c.is_zero()) continue;
            numerator += c * (prod * column_polys[j]);
        }
        RationalFormula f_i(numerator, k_target);

        MultiPoly residual = verify_residual(spec, f_i, prev);
        if (!residual.is_zero())
            throw DerivationError("order-" + std::to_string(order) +
                                      " solution fails independent residual re-check",
                                  order, std::move(report));

        result.binomial_moments.formulas.push_back(std::move(f_i));
        result.system_ranks.push_back(report.rank);
    }
    return result;
}

}  // namespace ruin
