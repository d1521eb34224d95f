#include "ruin/decimal.hpp"

#include <algorithm>

namespace ruin {

namespace {

constexpr int kGuardDigits = 5;

BigInt pow10(int k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(k));
    return r;
}

/// Number of decimal digits of a positive integer.
int digit_count(const BigInt& n) {
    return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 10));
}

/// Exponent e with value in [10^e, 10^(e+1)) for a positive rational.
int decimal_exponent(const BigRational& value) {
    BigInt num = value.numerator();
    BigInt den = value.denominator();
    int e = digit_count(num) - digit_count(den);
    // digit counts bound the exponent within one; settle it exactly.
    while (num >= den * pow10(e + 1)) ++e;
    while (num < den * pow10(e)) --e;
    return e;
}

/// Formats `digits` (exactly sig_digits of them) with the decimal point
/// placed so the value is digits * 10^(exponent - sig_digits + 1).
std::string place_point(const std::string& digits, int exponent) {
    const int n = static_cast<int>(digits.size());
    std::string out;
    if (exponent >= 0) {
        if (exponent + 1 >= n) {
            out = digits + std::string(static_cast<std::size_t>(exponent + 1 - n), '0');
        } else {
            out = digits.substr(0, static_cast<std::size_t>(exponent + 1)) + "." +
                  digits.substr(static_cast<std::size_t>(exponent + 1));
        }
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    }
    return out;
}

/// First sig_digits digits of scaled, rounded half away from zero at the
/// cut. `scaled` holds the value's digits with at least kGuardDigits extra.
/// Returns the digit string and bumps the exponent when rounding carries
/// over (e.g. 999.97 -> 1000).
std::string round_digits(BigInt scaled, int extra_digits, int sig_digits, int& exponent) {
    BigInt cut = pow10(extra_digits);
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), cut.get_mpz_t());
    if (2 * r >= cut) q += 1;
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) > sig_digits) {
        // carry out of the leading digit
        ++exponent;
        digits.pop_back();
    }
    return digits;
}

}  // namespace

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw DomainError("isqrt of a negative integer");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<BigRational> exact_sqrt(const BigRational& value) {
    if (value.is_negative()) return std::nullopt;
    if (value.is_zero()) return BigRational(0);
    BigInt num = value.numerator();
    BigInt den = value.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    return BigRational(isqrt(num), isqrt(den));
}

std::string render_decimal(const BigRational& value, int sig_digits) {
    if (sig_digits < 1) throw DomainError("need at least one significant digit");
    if (value.is_zero()) return "0";
    if (value.is_negative()) return "-" + render_decimal(-value, sig_digits);

    // The value is exact, so round directly on the scaled rational.
    int e = decimal_exponent(value);
    int shift = sig_digits - 1 - e;
    BigInt num = value.numerator();
    BigInt den = value.denominator();
    if (shift >= 0) {
        num *= pow10(shift);
    } else {
        den *= pow10(-shift);
    }
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) > sig_digits) {
        ++e;
        digits.pop_back();
    }
    return place_point(digits, e);
}

std::string render_sqrt_decimal(const BigRational& square, int sig_digits) {
    if (sig_digits < 1) throw DomainError("need at least one significant digit");
    if (square.is_negative()) throw DomainError("square root of a negative value");
    if (auto exact = exact_sqrt(square)) return render_decimal(*exact, sig_digits);

    // floor(sqrt(square) * 10^m) via isqrt of the scaled numerator.
    BigInt num = square.numerator();
    BigInt den = square.denominator();
    int e2 = decimal_exponent(square);
    int e = e2 >= 0 ? e2 / 2 : (e2 - 1) / 2;  // exponent of the root, within one
    int m = sig_digits + kGuardDigits + 1 - e;
    if (m < 0) m = 0;
    BigInt scaled = isqrt(num * pow10(2 * m) / den);
    int e_root = digit_count(scaled) - 1 - m;
    int extra = digit_count(scaled) - sig_digits;
    std::string digits = round_digits(scaled, extra, sig_digits, e_root);
    return place_point(digits, e_root);
}

std::string render_decimal_trimmed(const BigRational& value, int sig_digits) {
    std::string s = render_decimal(value, sig_digits);
    auto point = s.find('.');
    if (point == std::string::npos) return s + ".0";
    std::size_t last = s.find_last_not_of('0');
    if (last == point) last = point + 1;
    return s.substr(0, last + 1);
}

}  // namespace ruin
