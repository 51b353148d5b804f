#include "evolalg/linalg/scalar.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "evolalg/error.hpp"

namespace evolalg::linalg {

namespace {

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint32_t exp, std::uint32_t p) {
    std::uint32_t result = 1 % p;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

std::uint32_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);  // floor division: r in [0, p)
    return static_cast<std::uint32_t>(r.get_ui());
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p > std::numeric_limits<std::int32_t>::max() || !is_prime_number(p)) {
        throw ValidationError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return Field(FieldKind::Prime, static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
    if (kind_ == FieldKind::Rational) return "rational";
    return "prime " + std::to_string(modulus_);
}

Scalar Scalar::from_integer(const Field& field, long value) {
    return from_fraction(field, mpz_class(value), mpz_class(1));
}

Scalar Scalar::from_fraction(const Field& field, const mpz_class& num, const mpz_class& den) {
    if (field.kind() == FieldKind::Rational) {
        if (den == 0) throw FieldError("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(std::move(q));
    }
    const std::uint32_t p = field.modulus();
    const std::uint32_t d = reduce_mpz(den, p);
    if (d == 0) throw FieldError("denominator is divisible by the field characteristic " + std::to_string(p));
    const std::uint32_t n = reduce_mpz(num, p);
    return Scalar(Residue{mul_mod(n, pow_mod(d, p - 2, p), p), p});
}

Scalar Scalar::parse(std::string_view text, const Field& field) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num_text = body;
    std::string_view den_text = "1";
    if (const auto slash = body.find('/'); slash != std::string_view::npos) {
        num_text = body.substr(0, slash);
        den_text = body.substr(slash + 1);
    }
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    }
    mpz_class num(std::string(num_text), 10);
    const mpz_class den(std::string(den_text), 10);
    if (negative) num = -num;
    return from_fraction(field, num, den);
}

Field Scalar::field() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return Field(FieldKind::Prime, r->modulus);
    return Field::rational();
}

bool Scalar::is_zero() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("inverse of zero");
    if (const auto* r = std::get_if<Residue>(&value_)) {
        return Scalar(Residue{pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus});
    }
    mpq_class q = 1 / std::get<mpq_class>(value_);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::operator-() const {
    if (const auto* r = std::get_if<Residue>(&value_)) {
        return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
    }
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

void Scalar::require_same_field(const Scalar& other) const {
    const auto* a = std::get_if<Residue>(&value_);
    const auto* b = std::get_if<Residue>(&other.value_);
    if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
        throw FieldError("scalars belong to different fields");
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        const auto s = std::uint64_t{r->value} + std::get<Residue>(rhs.value_).value;
        r->value = static_cast<std::uint32_t>(s % r->modulus);
    } else {
        std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* r = std::get_if<Residue>(&value_)) {
        r->value = mul_mod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
    } else {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) return false;
    if (const auto* r = std::get_if<Residue>(&a.value_)) return *r == std::get<Residue>(b.value_);
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
    return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldError("scalar is not rational");
}

Residue Scalar::residue() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return *r;
    throw FieldError("scalar is not a residue");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace evolalg::linalg
