#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace dodgson {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two scalars from different domains met in one operation.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// An integer division left a remainder. In this library that always means a
/// broken invariant upstream (the condensation quotient is exact whenever the
/// divisor is nonzero), so it is an error, never a silent promotion.
class InexactDivision : public Error {
public:
    using Error::Error;
};

enum class DomainKind { integers, rationals, prime_field };

/// Deterministic primality test (Miller-Rabin with a fixed witness set,
/// exact for all n below 3.3e24; larger moduli are rejected elsewhere).
bool is_prime(const mpz_class& n);

/// The ring all entries of one matrix live in: arbitrary-precision integers,
/// exact rationals, or the field of integers modulo a prime.
class RingDomain {
public:
    static RingDomain integers();
    static RingDomain rationals();
    static RingDomain prime_field(const mpz_class& p);  // throws Error unless p is prime

    DomainKind kind() const noexcept { return kind_; }
    const mpz_class& modulus() const;  // prime_field only

    bool operator==(const RingDomain& o) const;
    bool operator!=(const RingDomain& o) const { return !(*this == o); }

    /// "integers", "rationals", or "fp <p>".
    std::string name() const;
    /// Inverse of name(); also accepts the compact "fp5" / "gf5" spellings.
    static RingDomain parse(const std::string& text);

private:
    RingDomain(DomainKind k, mpz_class m) : kind_(k), modulus_(std::move(m)) {}
    DomainKind kind_;
    mpz_class modulus_;  // 0 unless prime_field
};

/// Immutable exact ring element. Arithmetic is closed within one domain;
/// mixing domains throws DomainMismatch.
class Scalar {
public:
    Scalar();  // integer 0

    static Scalar integer(mpz_class v);
    static Scalar integer(long v) { return integer(mpz_class(v)); }
    /// Reduced to lowest terms with positive denominator. Throws on den == 0.
    static Scalar rational(const mpz_class& num, const mpz_class& den);
    /// Residue reduced into [0, p).
    static Scalar fp(const mpz_class& r, const RingDomain& field);

    static Scalar zero(const RingDomain& d);
    static Scalar one(const RingDomain& d);
    /// Embed a small integer into any domain.
    static Scalar from_long(long v, const RingDomain& d);

    const RingDomain& domain() const { return domain_; }
    bool is_zero() const;
    bool is_one() const;
    int sign() const;  // -1, 0, +1 (prime-field elements: 0 or +1)

    /// Integer value, or the residue for prime-field elements.
    const mpz_class& int_value() const;
    const mpq_class& rat_value() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    /// Exact equality. Scalars from different domains are never equal.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "-15", "5/6", "2 mod 7".
    std::string str() const;
    /// Parses the same grammar str() emits. With an expected domain, plain
    /// integers embed into it; a stated modulus must match it.
    static Scalar parse(const std::string& text,
                        const std::optional<RingDomain>& expected = std::nullopt);

private:
    Scalar(RingDomain d, mpz_class v) : domain_(std::move(d)), value_(std::move(v)) {}
    Scalar(RingDomain d, mpq_class v) : domain_(std::move(d)), value_(std::move(v)) {}
    RingDomain domain_;
    std::variant<mpz_class, mpq_class> value_;
};

/// Exact quotient a / b. Integer domain: b must divide a (InexactDivision
/// otherwise); any domain: b must be nonzero (DivisionByZero otherwise).
Scalar div_exact(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace dodgson
