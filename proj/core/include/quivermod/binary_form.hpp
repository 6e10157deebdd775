#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quivermod {

/// A binary form over Q: a homogeneous polynomial in (x0, x1) of fixed
/// degree d, with coefficient(k) multiplying x0^(d-k) * x1^k.
class BinaryForm {
  public:
    explicit BinaryForm(std::size_t degree) : coeffs_(degree + 1, mpq_class(0)) {}
    BinaryForm(std::size_t degree, std::vector<mpq_class> coeffs);

    std::size_t degree() const { return coeffs_.size() - 1; }
    const mpq_class& coeff(std::size_t k) const { return coeffs_[k]; }
    mpq_class& coeff(std::size_t k) { return coeffs_[k]; }

    bool is_zero() const;
    bool is_constant() const { return degree() == 0; }

    BinaryForm operator+(const BinaryForm& rhs) const;  // same degree
    BinaryForm operator*(const BinaryForm& rhs) const;
    BinaryForm scaled(const mpq_class& c) const;
    bool operator==(const BinaryForm& rhs) const { return coeffs_ == rhs.coeffs_; }

    mpq_class evaluate(const mpq_class& x0, const mpq_class& x1) const;

    /// Multiplicity of x1 as a factor (degree+1 for the zero form).
    std::size_t x1_valuation() const;

    std::string to_string() const;

  private:
    std::vector<mpq_class> coeffs_;
};

/// Monic gcd of a set of binary forms, computed on the chart x1 = 1 with
/// the x1-power content tracked separately.  Errors when every form is
/// zero ("all minors vanish").
BinaryForm binary_form_gcd(const std::vector<BinaryForm>& forms);

bool binary_form_divides(const BinaryForm& divisor, const BinaryForm& f);

struct FormRationalRoot {
    mpq_class x0, x1;  // a projective point [x0 : x1]
};

/// A rational projective root of the form, if one exists; [1:0] is
/// reported first, then the smallest affine root [t:1].
std::optional<FormRationalRoot> first_rational_root(const BinaryForm& f);

}  // namespace quivermod
