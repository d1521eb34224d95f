#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ruin/errors.hpp"

namespace ruin {

/// Arbitrary-precision integer. GMP supplies the representation.
using BigInt = mpz_class;

/// Exact rational scalar. Always stored reduced, denominator positive,
/// zero is 0/1. Reduction happens on construction, never lazily, so
/// operator== is canonical equality.
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    explicit BigRational(const BigInt& n) : v_(n) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q" with optional leading sign.
    static BigRational from_string(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// "p" when the value is integral, "p/q" otherwise.
    std::string str() const;

    BigRational operator-() const { return BigRational(mpq_class(-v_)); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }

    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend BigRational abs(const BigRational& r) {
        return r.is_negative() ? -r : r;
    }

private:
    explicit BigRational(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace ruin
