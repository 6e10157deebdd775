#include "quivermod/field.hpp"

#include <cctype>

namespace quivermod {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31))
        throw Error("prime field modulus " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime_u32(p))
        throw Error("prime field modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = FieldKind::Prime;
    f.p = p;
    return f;
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "rationals" : "mod " + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "rationals" || text == "Q") return rationals();
    if (text.rfind("mod ", 0) == 0) {
        const std::string digits = text.substr(4);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad field spec: \"" + text + "\"");
        unsigned long p = std::stoul(digits);
        return prime(static_cast<std::uint32_t>(p));
    }
    throw ParseError("bad field spec: \"" + text + "\" (expected \"rationals\" or \"mod p\")");
}

namespace {

std::uint32_t mod_reduce(const mpz_class& z, std::uint32_t p) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw Error("division by zero in F_" + std::to_string(p));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
    if (field_.is_rationals()) {
        rational_ = value;
    } else {
        mpz_class z(value);
        residue_ = mod_reduce(z, field_.p);
    }
}

Scalar::Scalar(FieldSpec field, const mpz_class& value) : field_(field) {
    if (field_.is_rationals()) {
        rational_ = value;
    } else {
        residue_ = mod_reduce(value, field_.p);
    }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
    if (field_.is_rationals()) {
        rational_ = value;
        rational_.canonicalize();
    } else {
        const std::uint32_t den = mod_reduce(value.get_den(), field_.p);
        if (den == 0)
            throw Error("bad prime: denominator of " + value.get_str() +
                        " vanishes mod " + std::to_string(field_.p));
        residue_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(mod_reduce(value.get_num(), field_.p)) *
             mod_inverse(den, field_.p)) %
            field_.p);
    }
}

Scalar Scalar::from_string(FieldSpec field, const std::string& text) {
    std::string body = text;
    const auto mod_pos = text.find(" mod ");
    if (mod_pos != std::string::npos) {
        const std::string mod_part = text.substr(mod_pos + 5);
        if (!field.is_prime_field() || mod_part != std::to_string(field.p))
            throw ParseError("scalar \"" + text + "\" does not belong to " + field.to_string());
        body = text.substr(0, mod_pos);
    }
    mpq_class q;
    if (q.set_str(body, 10) != 0)
        throw ParseError("bad scalar literal: \"" + text + "\"");
    if (q.get_den() == 0) throw ParseError("zero denominator in scalar \"" + text + "\"");
    q.canonicalize();
    return Scalar(field, q);
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rational_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rational_ == 1 : residue_ == 1 % field_.p;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw Error("scalar is not rational");
    return rational_;
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw Error("scalar is not a prime-field residue");
    return residue_;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw Error("field mismatch: " + field_.to_string() + " vs " + rhs.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar out(field_);
    if (field_.is_rationals()) {
        out.rational_ = -rational_;
    } else {
        out.residue_ = residue_ == 0 ? 0 : field_.p - residue_;
    }
    return out;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar out(field_);
    if (field_.is_rationals()) {
        out.rational_ = rational_ + rhs.rational_;
    } else {
        std::uint64_t s = static_cast<std::uint64_t>(residue_) + rhs.residue_;
        if (s >= field_.p) s -= field_.p;
        out.residue_ = static_cast<std::uint32_t>(s);
    }
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar out(field_);
    if (field_.is_rationals()) {
        out.rational_ = rational_ * rhs.rational_;
    } else {
        out.residue_ = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(residue_) * rhs.residue_) % field_.p);
    }
    return out;
}

Scalar Scalar::inverse() const {
    Scalar out(field_);
    if (field_.is_rationals()) {
        if (rational_ == 0) throw Error("division by zero");
        out.rational_ = 1 / rational_;
    } else {
        out.residue_ = mod_inverse(residue_, field_.p);
    }
    return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    check_same_field(rhs);
    return *this * rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.is_rationals() ? rational_ == rhs.rational_ : residue_ == rhs.residue_;
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return rational_.get_str();
    return std::to_string(residue_) + " mod " + std::to_string(field_.p);
}

Scalar reduce_mod_p(const Scalar& rational_scalar, std::uint32_t p) {
    return Scalar(FieldSpec::prime(p), rational_scalar.rational());
}

}  // namespace quivermod
