#include "ruin/multipoly.hpp"

#include <algorithm>

#include "ruin/stirling.hpp"

namespace ruin {

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars != 2 && nvars != 3) throw ShapeError("variable count must be 2 or 3");
}

MultiPoly MultiPoly::constant(int nvars, BigRational value) {
    MultiPoly p(nvars);
    p.add_term(Monomial::unit(nvars), value);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    MultiPoly p(nvars);
    p.add_term(Monomial::variable(nvars, index), BigRational(1));
    return p;
}

MultiPoly MultiPoly::from_term(const Monomial& m, BigRational coeff) {
    MultiPoly p(m.nvars);
    p.add_term(m, coeff);
    return p;
}

MultiPoly MultiPoly::variable_sum(int nvars) {
    MultiPoly p(nvars);
    for (int i = 0; i < nvars; ++i) p.add_term(Monomial::variable(nvars, i), BigRational(1));
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    // Graded order puts the highest total degree first.
    return terms_.begin()->first.degree();
}

BigRational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
}

void MultiPoly::require_same_shape(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw ShapeError("variable-count mismatch");
}

void MultiPoly::add_term(const Monomial& m, const BigRational& coeff) {
    if (m.nvars != nvars_) throw ShapeError("monomial variable-count mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_shape(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_shape(b);
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{a.nvars_, {ma.exp[0] + mb.exp[0], ma.exp[1] + mb.exp[1], ma.exp[2] + mb.exp[2]}};
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const BigRational& s, const MultiPoly& p) {
    MultiPoly r(p.nvars_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw DomainError("negative polynomial power");
    MultiPoly result = constant(nvars_, BigRational(1));
    for (int i = 0; i < k; ++i) result = result * *this;
    return result;
}

MultiPoly MultiPoly::shift_substitute(std::span<const int> offsets) const {
    if (static_cast<int>(offsets.size()) != nvars_)
        throw ShapeError("offset count must equal variable count");
    MultiPoly result(nvars_);
    for (const auto& [m, c] : terms_) {
        // Expand c * prod_v (v + offset_v)^e_v term by term.
        MultiPoly expanded = constant(nvars_, c);
        for (int v = 0; v < nvars_; ++v) {
            int e = m.exp[static_cast<std::size_t>(v)];
            if (e == 0) continue;
            int off = offsets[static_cast<std::size_t>(v)];
            if (off == 0) {
                Monomial pure{nvars_, {0, 0, 0}};
                pure.exp[static_cast<std::size_t>(v)] = e;
                expanded = expanded * from_term(pure, BigRational(1));
                continue;
            }
            MultiPoly binom(nvars_);
            BigInt offpow(1);
            for (int k = e; k >= 0; --k) {
                // coefficient C(e,k) * off^(e-k) on v^k
                Monomial mk{nvars_, {0, 0, 0}};
                mk.exp[static_cast<std::size_t>(v)] = k;
                binom.add_term(mk, BigRational(binomial(e, k) * offpow));
                offpow *= off;
            }
            expanded = expanded * binom;
        }
        result += expanded;
    }
    return result;
}

BigRational MultiPoly::evaluate(std::span<const BigRational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw ShapeError("point length must equal variable count");
    BigRational sum(0);
    for (const auto& [m, c] : terms_) {
        BigRational term = c;
        for (int v = 0; v < nvars_; ++v) {
            for (int k = 0; k < m.exp[static_cast<std::size_t>(v)]; ++k)
                term *= point[static_cast<std::size_t>(v)];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::substitute_zero(int var) const {
    if (var < 0 || var >= nvars_) throw ShapeError("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.exp[static_cast<std::size_t>(var)] == 0) r.terms_.emplace(m, c);
    }
    return r;
}

MultiPoly MultiPoly::permute_variables(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != nvars_)
        throw ShapeError("permutation length must equal variable count");
    MultiPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial pm{nvars_, {0, 0, 0}};
        for (int v = 0; v < nvars_; ++v)
            pm.exp[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
                m.exp[static_cast<std::size_t>(v)];
        r.add_term(pm, c);
    }
    return r;
}

std::map<int, BigRational> MultiPoly::collapse_to_univariate() const {
    std::map<int, BigRational> out;
    for (const auto& [m, c] : terms_) {
        auto [it, inserted] = out.emplace(m.degree(), c);
        if (!inserted) it->second += c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::optional<MultiPoly> MultiPoly::divide_by_variable_sum() const {
    // Treat the polynomial as univariate in A and divide by A - (-B-C):
    // synthetic division with exact coefficients in the remaining variables.
    if (is_zero()) return MultiPoly(nvars_);
    int max_a = 0;
    for (const auto& [m, c] : terms_) max_a = std::max(max_a, m.exp[0]);

    // Coefficient of A^d as a polynomial in the other variables (stored with
    // the same variable count, A-exponent zero).
    std::vector<MultiPoly> by_a(static_cast<std::size_t>(max_a) + 1, MultiPoly(nvars_));
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        rest.exp[0] = 0;
        by_a[static_cast<std::size_t>(m.exp[0])].add_term(rest, c);
    }

    MultiPoly rest_sum(nvars_);  // B or B+C
    for (int v = 1; v < nvars_; ++v) rest_sum += variable(nvars_, v);

    std::vector<MultiPoly> quotient(static_cast<std::size_t>(max_a), MultiPoly(nvars_));
    MultiPoly carry(nvars_);
    for (int d = max_a; d >= 1; --d) {
        MultiPoly q = by_a[static_cast<std::size_t>(d)] + carry;
        quotient[static_cast<std::size_t>(d - 1)] = q;
        carry = -(rest_sum * q);
    }
    MultiPoly remainder = by_a[0] + carry;
    if (!remainder.is_zero()) return std::nullopt;

    MultiPoly result(nvars_);
    for (int d = 0; d < max_a; ++d) {
        Monomial a_pow{nvars_, {d, 0, 0}};
        result += from_term(a_pow, BigRational(1)) * quotient[static_cast<std::size_t>(d)];
    }
    return result;
}

}  // namespace ruin
