#pragma once

#include <array>
#include <vector>

#include "ruin/linear.hpp"
#include "ruin/moments.hpp"

namespace ruin {

/// One game round: an ordered (giver, receiver) pair moves one dollar.
/// Two players have 2 transfer vectors, three players have 6, each
/// weighted uniformly.
struct RecurrenceSpec {
    int players;
    std::vector<std::array<int, kMaxVars>> transfers;
    BigRational weight;

    static RecurrenceSpec for_players(int players);
};

/// Monomial basis for the reduced unknown q of one derivation order:
/// f_i = A*B*q for two players, f_i = A*B*C*q / (A+B+C) for three, with
/// deg q <= 2i-2. Order 0 is special-cased (f_0 = 1, empty basis).
struct AnsatzBasis {
    int players;
    int order;
    std::vector<Monomial> monomials;
};

AnsatzBasis build_basis(int players, int order);

struct AssembledSystem {
    Matrix matrix;
    std::vector<BigRational> rhs;
    std::vector<Monomial> row_monomials;
};

/// Expands the recurrence residual over the ansatz with undetermined
/// coefficients and equates every monomial coefficient to zero: one row
/// per monomial (canonical order), one column per unknown. The rhs
/// collects the contribution of the previous-order formula. For three
/// players the equation is first cleared of its denominator, which every
/// transfer leaves invariant.
AssembledSystem assemble_recurrence_system(const RecurrenceSpec& spec, const AnsatzBasis& basis,
                                           const RationalFormula& f_prev);

/// Recurrence residual of a candidate f_i against a confirmed f_{i-1},
/// fully expanded after clearing denominators. The zero polynomial
/// certifies the candidate. Independent of the linear solve.
MultiPoly verify_residual(const RecurrenceSpec& spec, const RationalFormula& f_i,
                          const RationalFormula& f_prev);

struct DeriveOptions {
    /// Restrict the unknown cofactor to symmetric polynomials. Off by
    /// default; results must be identical either way.
    bool symmetric_basis = false;
};

struct DerivationResult {
    int players;
    int max_order;
    MomentSet binomial_moments;     // orders 0..max_order
    std::vector<int> system_ranks;  // one per derived order 1..max_order
};

/// A derivation-order system that was not uniquely solvable. Signals an
/// ansatz violation rather than an implementation fault; the offending
/// report rides along.
class DerivationError : public std::runtime_error {
public:
    DerivationError(std::string what, int order, SolutionReport report)
        : std::runtime_error(std::move(what)), order_(order), report_(std::move(report)) {}

    int order() const { return order_; }
    const SolutionReport& report() const { return report_; }

private:
    int order_;
    SolutionReport report_;
};

/// Iterates the ansatz orders 1..max_order, feeding each solved formula
/// into the next, recording every system rank and re-certifying each
/// result through verify_residual.
DerivationResult derive_binomial_moments(int players, int max_order,
                                         const DeriveOptions& options = {});

}  // namespace ruin
