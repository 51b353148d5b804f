#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace evolalg::linalg {

enum class FieldKind { Rational, Prime };

/// The ground field: the rationals, or F_p for a prime p that fits in 31 bits.
class Field {
public:
    static Field rational() { return Field(FieldKind::Rational, 0); }

    /// Throws ValidationError unless p is a prime in [2, 2^31).
    static Field prime(std::uint64_t p);

    FieldKind kind() const noexcept { return kind_; }
    bool is_prime() const noexcept { return kind_ == FieldKind::Prime; }

    /// p for prime fields, 0 for the rationals.
    std::uint32_t modulus() const noexcept { return modulus_; }

    /// "rational" or "prime <p>"; the same text the document format uses.
    std::string name() const;

    bool operator==(const Field&) const = default;

private:
    friend class Scalar;

    Field(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint32_t modulus_;
};

bool is_prime_number(std::uint64_t n);

/// Residue class modulo a prime, always stored in [0, modulus).
struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;

    bool operator==(const Residue&) const = default;
};

/// An exact field element. Rationals are kept in lowest terms with a positive
/// denominator, residues in [0, p), so equal values have equal representations.
///
/// Binary operations require both operands to belong to the same field and
/// throw FieldError otherwise. A default-constructed scalar is the rational 0.
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar zero(const Field& field) { return from_integer(field, 0); }
    static Scalar one(const Field& field) { return from_integer(field, 1); }
    static Scalar from_integer(const Field& field, long value);

    /// num/den mapped into the field. Throws FieldError when den is 0 (or 0 mod p).
    static Scalar from_fraction(const Field& field, const mpz_class& num, const mpz_class& den);

    /// Parses `[+-]digits[/digits]`. Throws FieldError on a zero denominator and
    /// std::invalid_argument on any other malformed text.
    static Scalar parse(std::string_view text, const Field& field);

    Field field() const;
    bool is_zero() const;

    /// Multiplicative inverse; throws FieldError for zero.
    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: "n", "-n/d" for rationals; the residue for prime fields.
    std::string to_string() const;

    /// Only valid for rationals.
    const mpq_class& rational() const;
    /// Only valid for prime-field scalars.
    Residue residue() const;

private:
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    explicit Scalar(Residue r) : value_(r) {}

    void require_same_field(const Scalar& other) const;

    std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace evolalg::linalg
