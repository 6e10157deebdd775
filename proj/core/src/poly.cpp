#include "quivermod/poly.hpp"

#include <algorithm>

#include "quivermod/error.hpp"

namespace quivermod::unipoly {

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_zero(const Poly& p) { return trim(p).empty(); }

int degree(const Poly& p) {
    for (std::size_t k = p.size(); k-- > 0;)
        if (p[k] != 0) return static_cast<int>(k);
    return -1;
}

Poly monic(const Poly& p) {
    Poly q = trim(p);
    if (q.empty()) return q;
    const mpq_class lead = q.back();
    for (auto& c : q) c /= lead;
    return q;
}

Poly add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    return trim(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return trim(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    Poly rem = trim(a);
    const Poly den = trim(b);
    if (den.empty()) throw Error("polynomial division by zero");
    const int db = static_cast<int>(den.size()) - 1;
    if (static_cast<int>(rem.size()) - 1 < db) return {{}, rem};
    Poly quot(rem.size() - den.size() + 1, mpq_class(0));
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        const mpq_class c = rem.back() / den.back();
        const std::size_t shift = rem.size() - den.size();
        quot[shift] = c;
        for (std::size_t k = 0; k < den.size(); ++k) rem[shift + k] -= c * den[k];
        rem = trim(std::move(rem));
        if (rem.empty()) break;
    }
    return {trim(std::move(quot)), rem};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = trim(a), y = trim(b);
    while (!y.empty()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

mpq_class evaluate(const Poly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

namespace {

// Complete factorization by trial division, with a primality early-out on
// the remaining cofactor.
std::vector<std::pair<mpz_class, int>> factorize(mpz_class n) {
    std::vector<std::pair<mpz_class, int>> factors;
    if (n < 0) n = -n;
    if (n <= 1) return factors;
    auto strip = [&](const mpz_class& d) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            ++e;
        }
        if (e > 0) factors.emplace_back(d, e);
    };
    strip(2);
    strip(3);
    mpz_class d = 5;
    while (d * d <= n) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 25) != 0) break;
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    std::vector<mpz_class> out{1};
    for (const auto& [prime, exp] : factorize(n)) {
        const std::size_t base = out.size();
        mpz_class power = 1;
        for (int e = 1; e <= exp; ++e) {
            power *= prime;
            for (std::size_t k = 0; k < base; ++k) out.push_back(out[k] * power);
        }
    }
    return out;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
    RationalRoots out;
    Poly q = trim(p);
    if (q.empty()) throw Error("rational_roots of the zero polynomial");
    const int n = degree(q);

    // Strip zero roots first.
    int zero_mult = 0;
    while (q.size() > 1 && q.front() == 0) {
        q.erase(q.begin());
        ++zero_mult;
    }

    // Clear denominators to an integer polynomial.
    mpz_class denlcm = 1;
    for (const auto& c : q) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> z(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
        mpq_class scaled = q[k] * denlcm;
        z[k] = scaled.get_num();
    }

    std::vector<std::pair<mpq_class, int>> found;
    if (zero_mult > 0) found.emplace_back(mpq_class(0), zero_mult);

    if (q.size() > 1) {
        std::vector<mpq_class> candidates;
        for (const auto& num : divisors(z.front()))
            for (const auto& den : divisors(z.back())) {
                mpq_class c(num, den);
                c.canonicalize();
                candidates.push_back(c);
                candidates.push_back(-c);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        Poly rem = q;
        for (const auto& cand : candidates) {
            int mult = 0;
            while (degree(rem) >= 1 && evaluate(rem, cand) == 0) {
                rem = divmod(rem, Poly{-cand, mpq_class(1)}).first;
                ++mult;
            }
            if (mult > 0) found.emplace_back(cand, mult);
        }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    int total = 0;
    for (const auto& [root, mult] : found) total += mult;
    out.roots = std::move(found);
    out.complete = (total == n);
    return out;
}

}  // namespace quivermod::unipoly
