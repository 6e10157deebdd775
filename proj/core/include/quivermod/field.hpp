#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "quivermod/error.hpp"

namespace quivermod {

enum class FieldKind { Rationals, Prime };

/// An exact coefficient field: the rationals, or a prime field F_p with
/// p < 2^31.  All scalars, matrices and representations carry one.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(std::uint32_t p);  // validates primality

    bool is_rationals() const { return kind == FieldKind::Rationals; }
    bool is_prime_field() const { return kind == FieldKind::Prime; }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const;  // "rationals" or "mod 7"
    static FieldSpec parse(const std::string& text);
};

bool is_prime_u32(std::uint32_t n);

/// An element of an exact field.  Serializes as "5", "-3/7" (rationals)
/// or "4 mod 7" (prime fields).
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rationals()) {}
    explicit Scalar(FieldSpec field) : field_(field) {}
    Scalar(FieldSpec field, long value);
    Scalar(FieldSpec field, const mpz_class& value);
    Scalar(FieldSpec field, const mpq_class& value);

    static Scalar zero(FieldSpec field) { return Scalar(field); }
    static Scalar one(FieldSpec field) { return Scalar(field, 1); }
    /// Parses "5", "-3/7", "4 mod 7".  A "mod" suffix must match `field`.
    static Scalar from_string(FieldSpec field, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// The rational value; requires a rational scalar.
    const mpq_class& rational() const;
    /// The canonical residue in [0, p); requires a prime-field scalar.
    std::uint32_t residue() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;  // errors on zero divisor
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

  private:
    void check_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    mpq_class rational_;       // used when field is the rationals
    std::uint32_t residue_ = 0;  // used when field is a prime field
};

/// Entrywise reduction Q -> F_p.  Errors with "bad prime" when the
/// denominator is divisible by p.
Scalar reduce_mod_p(const Scalar& rational_scalar, std::uint32_t p);

}  // namespace quivermod
