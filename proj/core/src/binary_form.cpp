#include "quivermod/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "quivermod/error.hpp"
#include "quivermod/poly.hpp"

namespace quivermod {

namespace {

// Dehomogenize F / x1^val at x1 = 1: the coefficient of x0^(d-k) x1^k
// becomes the coefficient of x0^(d-k), so the polynomial in x = x0 reads
// the coefficient list back to front.
unipoly::Poly chart_poly(const BinaryForm& f, std::size_t val) {
    const std::size_t d = f.degree();
    unipoly::Poly p(d - val + 1, mpq_class(0));
    for (std::size_t k = val; k <= d; ++k) p[d - k] = f.coeff(k);
    return unipoly::trim(std::move(p));
}

// Homogenize p (degree D as a polynomial in x0) to a form of degree
// D + extra_x1, tacking on the x1-power content.
BinaryForm homogenize(const unipoly::Poly& p, std::size_t extra_x1) {
    const int d = unipoly::degree(p);
    if (d < 0) throw Error("homogenize of the zero polynomial");
    BinaryForm out(static_cast<std::size_t>(d) + extra_x1);
    for (int j = 0; j <= d; ++j) out.coeff(static_cast<std::size_t>(d - j) + extra_x1) = p[j];
    return out;
}

}  // namespace

BinaryForm::BinaryForm(std::size_t degree, std::vector<mpq_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != degree + 1)
        throw Error("binary form of degree " + std::to_string(degree) + " needs " +
                    std::to_string(degree + 1) + " coefficients");
}

bool BinaryForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

BinaryForm BinaryForm::operator+(const BinaryForm& rhs) const {
    if (degree() != rhs.degree()) throw Error("binary form degree mismatch in sum");
    BinaryForm out(degree());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    return out;
}

BinaryForm BinaryForm::operator*(const BinaryForm& rhs) const {
    BinaryForm out(degree() + rhs.degree());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    return out;
}

BinaryForm BinaryForm::scaled(const mpq_class& c) const {
    BinaryForm out = *this;
    for (auto& e : out.coeffs_) e *= c;
    return out;
}

mpq_class BinaryForm::evaluate(const mpq_class& x0, const mpq_class& x1) const {
    const std::size_t d = degree();
    // Powers computed explicitly; degrees here are tiny.
    mpq_class acc = 0;
    for (std::size_t k = 0; k <= d; ++k) {
        if (coeffs_[k] == 0) continue;
        mpq_class term = coeffs_[k];
        for (std::size_t e = 0; e < d - k; ++e) term *= x0;
        for (std::size_t e = 0; e < k; ++e) term *= x1;
        acc += term;
    }
    return acc;
}

std::size_t BinaryForm::x1_valuation() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return k;
    return coeffs_.size();
}

std::string BinaryForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    const std::size_t d = degree();
    for (std::size_t k = 0; k <= d; ++k) {
        if (coeffs_[k] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[k].get_str();
        if (d - k > 0) os << "*x0^" << (d - k);
        if (k > 0) os << "*x1^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

BinaryForm binary_form_gcd(const std::vector<BinaryForm>& forms) {
    if (forms.empty()) throw Error("binary_form_gcd of an empty set");
    std::size_t min_val = std::size_t(-1);
    unipoly::Poly g;
    bool any_nonzero = false;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        any_nonzero = true;
        const std::size_t val = f.x1_valuation();
        min_val = std::min(min_val, val);
        g = unipoly::gcd(g, chart_poly(f, val));
    }
    if (!any_nonzero) throw Error("all minors vanish");
    return homogenize(g, min_val);
}

bool binary_form_divides(const BinaryForm& divisor, const BinaryForm& f) {
    if (divisor.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    const std::size_t dval = divisor.x1_valuation();
    const std::size_t fval = f.x1_valuation();
    if (dval > fval) return false;
    const auto rem = unipoly::divmod(chart_poly(f, fval), chart_poly(divisor, dval)).second;
    return unipoly::is_zero(rem);
}

std::optional<FormRationalRoot> first_rational_root(const BinaryForm& f) {
    if (f.is_zero()) return FormRationalRoot{1, 0};  // identically zero: every fiber
    if (f.coeff(0) == 0) return FormRationalRoot{1, 0};
    const auto p = chart_poly(f, 0);
    if (unipoly::degree(p) < 1) return std::nullopt;
    const auto roots = unipoly::rational_roots(p);
    if (roots.roots.empty()) return std::nullopt;
    return FormRationalRoot{roots.roots.front().first, 1};
}

}  // namespace quivermod
