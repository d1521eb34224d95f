#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ruin/monomial.hpp"
#include "ruin/rational.hpp"

namespace ruin {

/// Multivariate polynomial over BigRational in the formal variables A, B
/// (and C for three players). Canonical form throughout: no stored
/// coefficient is zero, so map equality is polynomial equality.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigRational, MonomialOrder>;

    explicit MultiPoly(int nvars);

    static MultiPoly constant(int nvars, BigRational value);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly from_term(const Monomial& m, BigRational coeff);
    /// Sum of all variables: A+B or A+B+C.
    static MultiPoly variable_sum(int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigRational coeff(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const BigRational& s, const MultiPoly& p);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(int k) const;

    /// Replaces each variable v by v + offset[v] and expands.
    MultiPoly shift_substitute(std::span<const int> offsets) const;

    BigRational evaluate(std::span<const BigRational> point) const;

    /// Sets one variable to zero, dropping every term it divides.
    MultiPoly substitute_zero(int var) const;

    /// Applies a permutation of the variables: result uses variable
    /// perm[i] wherever this polynomial uses variable i.
    MultiPoly permute_variables(std::span<const int> perm) const;

    /// Substitutes every variable by one symbol; returns coefficients of
    /// the resulting univariate polynomial keyed by degree.
    std::map<int, BigRational> collapse_to_univariate() const;

    /// Exact quotient by (A+B) or (A+B+C); nullopt when not divisible.
    std::optional<MultiPoly> divide_by_variable_sum() const;

    /// Adds coeff * m into this polynomial, keeping canonical form.
    void add_term(const Monomial& m, const BigRational& coeff);

private:
    void require_same_shape(const MultiPoly& o) const;

    int nvars_;
    TermMap terms_;
};

}  // namespace ruin
