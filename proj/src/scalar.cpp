#include "dodgson/scalar.hpp"

#include <array>
#include <cctype>
#include <ostream>
#include <sstream>

namespace dodgson {

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) return false;
    }
    // Miller-Rabin with the first twelve primes as witnesses, which decides
    // primality exactly for every n < 3.317e24.
    static const mpz_class bound("3317044064679887385961981");
    if (n >= bound) throw Error("modulus too large for the deterministic primality check: " + n.get_str());

    mpz_class d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    const mpz_class n1 = n - 1;
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        mpz_class x;
        mpz_class base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1) continue;
        bool witness = true;
        for (unsigned long i = 1; i < r; ++i) {
            mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
            if (x == n1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

RingDomain RingDomain::integers() { return RingDomain(DomainKind::integers, 0); }
RingDomain RingDomain::rationals() { return RingDomain(DomainKind::rationals, 0); }

RingDomain RingDomain::prime_field(const mpz_class& p) {
    if (p < 2) throw Error("prime-field modulus must be >= 2, got " + p.get_str());
    if (!is_prime(p)) throw Error("prime-field modulus is not prime: " + p.get_str());
    return RingDomain(DomainKind::prime_field, p);
}

const mpz_class& RingDomain::modulus() const {
    if (kind_ != DomainKind::prime_field) throw Error("domain has no modulus: " + name());
    return modulus_;
}

bool RingDomain::operator==(const RingDomain& o) const {
    return kind_ == o.kind_ && modulus_ == o.modulus_;
}

std::string RingDomain::name() const {
    switch (kind_) {
        case DomainKind::integers: return "integers";
        case DomainKind::rationals: return "rationals";
        case DomainKind::prime_field: return "fp " + modulus_.get_str();
    }
    return "?";
}

RingDomain RingDomain::parse(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "integers" || t == "int" || t == "z") return integers();
    if (t == "rationals" || t == "rat" || t == "q") return rationals();
    if (t.rfind("fp", 0) == 0 || t.rfind("gf", 0) == 0) {
        std::string digits = t.substr(2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error("bad prime-field domain spec: '" + text + "'");
        return prime_field(mpz_class(digits));
    }
    throw Error("unknown domain: '" + text + "'");
}

namespace {

mpz_class mod_reduce(const mpz_class& v, const mpz_class& p) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}

void require_same_domain(const Scalar& a, const Scalar& b, const char* op) {
    if (a.domain() != b.domain())
        throw DomainMismatch(std::string(op) + ": operands from different domains (" +
                             a.domain().name() + " vs " + b.domain().name() + ")");
}

}  // namespace

Scalar::Scalar() : domain_(RingDomain::integers()), value_(mpz_class(0)) {}

Scalar Scalar::integer(mpz_class v) { return Scalar(RingDomain::integers(), std::move(v)); }

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(RingDomain::rationals(), std::move(q));
}

Scalar Scalar::fp(const mpz_class& r, const RingDomain& field) {
    if (field.kind() != DomainKind::prime_field)
        throw Error("Scalar::fp needs a prime-field domain, got " + field.name());
    return Scalar(field, mod_reduce(r, field.modulus()));
}

Scalar Scalar::zero(const RingDomain& d) { return from_long(0, d); }
Scalar Scalar::one(const RingDomain& d) { return from_long(1, d); }

Scalar Scalar::from_long(long v, const RingDomain& d) {
    switch (d.kind()) {
        case DomainKind::integers: return integer(v);
        case DomainKind::rationals: return rational(v, 1);
        case DomainKind::prime_field: return fp(mpz_class(v), d);
    }
    throw Error("bad domain kind");
}

bool Scalar::is_zero() const {
    if (domain_.kind() == DomainKind::rationals) return std::get<mpq_class>(value_) == 0;
    return std::get<mpz_class>(value_) == 0;
}

bool Scalar::is_one() const {
    if (domain_.kind() == DomainKind::rationals) return std::get<mpq_class>(value_) == 1;
    return std::get<mpz_class>(value_) == 1;
}

int Scalar::sign() const {
    if (domain_.kind() == DomainKind::rationals) return sgn(std::get<mpq_class>(value_));
    return sgn(std::get<mpz_class>(value_));
}

const mpz_class& Scalar::int_value() const {
    if (domain_.kind() == DomainKind::rationals) throw Error("rational scalar has no integer value");
    return std::get<mpz_class>(value_);
}

const mpq_class& Scalar::rat_value() const {
    if (domain_.kind() != DomainKind::rationals) throw Error("scalar is not rational");
    return std::get<mpq_class>(value_);
}

Scalar Scalar::operator-() const {
    switch (domain_.kind()) {
        case DomainKind::integers: return Scalar(domain_, mpz_class(-std::get<mpz_class>(value_)));
        case DomainKind::rationals: return Scalar(domain_, mpq_class(-std::get<mpq_class>(value_)));
        case DomainKind::prime_field:
            return Scalar(domain_, mod_reduce(-std::get<mpz_class>(value_), domain_.modulus()));
    }
    throw Error("bad domain kind");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b, "add");
    switch (a.domain_.kind()) {
        case DomainKind::integers:
            return Scalar(a.domain_, mpz_class(std::get<mpz_class>(a.value_) + std::get<mpz_class>(b.value_)));
        case DomainKind::rationals:
            return Scalar(a.domain_, mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
        case DomainKind::prime_field:
            return Scalar(a.domain_, mod_reduce(std::get<mpz_class>(a.value_) + std::get<mpz_class>(b.value_),
                                                a.domain_.modulus()));
    }
    throw Error("bad domain kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b, "mul");
    switch (a.domain_.kind()) {
        case DomainKind::integers:
            return Scalar(a.domain_, mpz_class(std::get<mpz_class>(a.value_) * std::get<mpz_class>(b.value_)));
        case DomainKind::rationals:
            return Scalar(a.domain_, mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
        case DomainKind::prime_field:
            return Scalar(a.domain_, mod_reduce(std::get<mpz_class>(a.value_) * std::get<mpz_class>(b.value_),
                                                a.domain_.modulus()));
    }
    throw Error("bad domain kind");
}

Scalar div_exact(const Scalar& a, const Scalar& b) {
    require_same_domain(a, b, "div_exact");
    if (b.is_zero()) throw DivisionByZero("division by zero in " + a.domain().name());
    switch (a.domain().kind()) {
        case DomainKind::integers: {
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.int_value().get_mpz_t(), b.int_value().get_mpz_t());
            if (r != 0)
                throw InexactDivision("inexact integer division: " + a.str() + " / " + b.str());
            return Scalar::integer(std::move(q));
        }
        case DomainKind::rationals: {
            mpq_class q = a.rat_value() / b.rat_value();
            return Scalar::rational(q.get_num(), q.get_den());
        }
        case DomainKind::prime_field: {
            const mpz_class& p = a.domain().modulus();
            mpz_class inv;
            if (!mpz_invert(inv.get_mpz_t(), b.int_value().get_mpz_t(), p.get_mpz_t()))
                throw DivisionByZero("noninvertible element mod " + p.get_str());
            return Scalar::fp(a.int_value() * inv, a.domain());
        }
    }
    throw Error("bad domain kind");
}

bool Scalar::operator==(const Scalar& o) const {
    if (domain_ != o.domain_) return false;
    if (domain_.kind() == DomainKind::rationals)
        return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
    return std::get<mpz_class>(value_) == std::get<mpz_class>(o.value_);
}

std::string Scalar::str() const {
    switch (domain_.kind()) {
        case DomainKind::integers: return std::get<mpz_class>(value_).get_str();
        case DomainKind::rationals: return std::get<mpq_class>(value_).get_str();
        case DomainKind::prime_field:
            return std::get<mpz_class>(value_).get_str() + " mod " + domain_.modulus().get_str();
    }
    return "?";
}

namespace {

bool looks_like_integer(const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    return t.find_first_not_of("0123456789", i) == std::string::npos;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, const std::optional<RingDomain>& expected) {
    std::istringstream in(text);
    std::string tok, tok2, tok3, extra;
    if (!(in >> tok)) throw Error("empty scalar text");
    bool has_mod = false;
    if (in >> tok2) {
        if (tok2 != "mod" || !(in >> tok3)) throw Error("bad scalar text: '" + text + "'");
        if (in >> extra) throw Error("trailing garbage in scalar text: '" + text + "'");
        has_mod = true;
    }

    if (has_mod) {
        if (!looks_like_integer(tok) || !looks_like_integer(tok3))
            throw Error("bad prime-field scalar: '" + text + "'");
        RingDomain field = RingDomain::prime_field(mpz_class(tok3));
        if (expected && *expected != field)
            throw Error("scalar '" + text + "' does not belong to " + expected->name());
        return fp(mpz_class(tok), field);
    }

    auto slash = tok.find('/');
    if (slash != std::string::npos) {
        std::string ns = tok.substr(0, slash), ds = tok.substr(slash + 1);
        if (!looks_like_integer(ns) || !looks_like_integer(ds))
            throw Error("bad rational scalar: '" + text + "'");
        if (expected && expected->kind() != DomainKind::rationals)
            throw Error("scalar '" + text + "' does not belong to " + expected->name());
        return rational(mpz_class(ns), mpz_class(ds));
    }

    if (!looks_like_integer(tok)) throw Error("bad scalar text: '" + text + "'");
    mpz_class v(tok);
    if (!expected) return integer(std::move(v));
    switch (expected->kind()) {
        case DomainKind::integers: return integer(std::move(v));
        case DomainKind::rationals: return rational(v, 1);
        case DomainKind::prime_field: return fp(v, *expected);
    }
    throw Error("bad domain kind");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace dodgson
