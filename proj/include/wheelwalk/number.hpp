#pragma once

// Exact scalar types shared by every engine. Integer and Rational are the
// GMP C++ classes; gmpxx keeps mpq_class canonical (den > 0, gcd 1) after
// every arithmetic operation.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wheelwalk {

using Integer = mpz_class;
using Rational = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScaleError : std::length_error {
    using std::length_error::length_error;
};

inline Integer make_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(make_integer(num), make_integer(den));
}

/// "num/den", or just "num" when the value is an integer.
inline std::string to_string(const Rational& r) { return r.get_str(10); }
inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Accepts "num/den" or "num" with optional leading '-'; the result is canonical.
inline Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw DomainError("empty rational");
    Rational r;
    if (r.set_str(s, 10) != 0) throw DomainError("malformed rational: " + s);
    if (r.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

/// Decimal rendering of r with exactly `digits` fractional digits, rounded
/// to nearest with ties to even.
inline std::string to_decimal(const Rational& r, int digits) {
    if (digits < 0) throw DomainError("negative digit count");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const Integer num = abs(r.get_num()) * scale;
    const Integer& den = r.get_den();
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const Integer twice = rem * 2;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) q += 1;

    std::string body = q.get_str(10);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    if (r < 0 && q != 0) body.insert(0, 1, '-');
    return body;
}

}  // namespace wheelwalk
