#pragma once

#include <array>
#include <compare>
#include <string>

#include "ruin/errors.hpp"

namespace ruin {

inline constexpr int kMaxVars = 3;
inline constexpr char kVarNames[kMaxVars] = {'A', 'B', 'C'};

/// Power product A^e0 * B^e1 (* C^e2). The variable count is 2 or 3;
/// unused exponent slots stay zero.
struct Monomial {
    int nvars = 2;
    std::array<int, kMaxVars> exp{0, 0, 0};

    static Monomial unit(int nvars) { return Monomial{nvars, {0, 0, 0}}; }

    static Monomial variable(int nvars, int index) {
        if (index < 0 || index >= nvars) throw ShapeError("variable index out of range");
        Monomial m{nvars, {0, 0, 0}};
        m.exp[static_cast<std::size_t>(index)] = 1;
        return m;
    }

    int degree() const {
        int d = 0;
        for (int i = 0; i < nvars; ++i) d += exp[static_cast<std::size_t>(i)];
        return d;
    }

    bool is_unit() const { return degree() == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.nvars == b.nvars && a.exp == b.exp;
    }
};

/// Canonical term order: graded lexicographic, higher total degree first,
/// ties broken lexicographically with A > B > C. Maps sorted with this
/// comparator iterate in display order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree();
        int db = b.degree();
        if (da != db) return da > db;
        return a.exp > b.exp;
    }
};

}  // namespace ruin
