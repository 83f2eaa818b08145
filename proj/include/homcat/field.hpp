#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace homcat {

/// Ground field: the rationals, or a prime field F_p.
///
/// Elements are carried as mpq_class values. Rational elements are kept in
/// lowest terms (mpq_class canonicalizes); prime-field elements are integers
/// in [0, p), i.e. least nonnegative residues with denominator 1.
struct Field {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    unsigned long p = 0;  // characteristic, PrimeField only

    static Field rationals() { return Field{Kind::Rationals, 0}; }
    static Field prime(unsigned long p);

    bool operator==(const Field&) const = default;

    bool is_prime_field() const { return kind == Kind::PrimeField; }

    /// Canonical form: reduce mod p for prime fields (no-op over Q).
    mpq_class reduce(const mpq_class& x) const;

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
    mpq_class neg(const mpq_class& a) const { return reduce(-a); }
    mpq_class inv(const mpq_class& a) const;
    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

    mpq_class zero() const { return mpq_class(0); }
    mpq_class one() const { return mpq_class(1); }
    mpq_class from_int(long n) const { return reduce(mpq_class(n)); }

    /// Whether x is a square in the field (used by the local-ring test).
    bool is_square(const mpq_class& x) const;

    /// Parse "p/q" (lowest terms enforced) or an integer residue.
    mpq_class parse(const std::string& s) const;
    static std::string to_string(const mpq_class& x) { return x.get_str(); }

    std::string describe() const;
};

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

}  // namespace homcat
