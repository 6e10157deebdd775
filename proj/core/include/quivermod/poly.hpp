#pragma once

#include <vector>

#include <gmpxx.h>

namespace quivermod {

// Minimal exact univariate polynomial helpers over Q.  Coefficients are
// stored low degree first; the zero polynomial is the empty vector.
// Shared by the characteristic-polynomial root finder and the binary-form
// gcd machinery.
namespace unipoly {

using Poly = std::vector<mpq_class>;

Poly trim(Poly p);
bool is_zero(const Poly& p);
int degree(const Poly& p);  // -1 for the zero polynomial
Poly monic(const Poly& p);
Poly add(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// Euclidean division; returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic, or zero if both zero
mpq_class evaluate(const Poly& p, const mpq_class& x);

struct RationalRoots {
    std::vector<std::pair<mpq_class, int>> roots;  // (root, multiplicity), ascending
    bool complete = false;                         // multiplicities sum to the degree
};

/// All rational roots with multiplicity, by the rational-root theorem on
/// the integer-cleared polynomial and repeated division.
RationalRoots rational_roots(const Poly& p);

}  // namespace unipoly
}  // namespace quivermod
