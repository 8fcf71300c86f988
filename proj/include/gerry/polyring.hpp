#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace gerry {

using BigInt = mpz_class;

// Dense univariate polynomial with nonnegative big-integer coefficients,
// coeffs[i] = [x^i].
struct CountPolynomial {
    std::vector<BigInt> coeffs;

    int degree() const;                        // -1 for the zero polynomial
    const BigInt& coeff(int i) const;          // 0 beyond the stored range
    void trim();                               // drop trailing zeros
    bool is_palindromic(int d) const;          // coeffs[i] == coeffs[d-i]
};

CountPolynomial poly_add(const CountPolynomial& a, const CountPolynomial& b);

// Product with every power > cap discarded; coefficients up to cap agree
// with the untruncated product. cap < 0 means no truncation.
CountPolynomial truncated_mul(const CountPolynomial& a, const CountPolynomial& b,
                              long cap);

struct ResidueVector {
    std::uint64_t prime = 0;
    std::vector<std::uint64_t> values;
};

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// The `count` largest primes below 2^31, descending. Deterministic.
std::vector<std::uint64_t> default_primes(int count);

// Reconstruct a palindromic polynomial of the given degree from evaluations
// at distinct nonzero points mod prime. Requires floor(degree/2)+1 points;
// extra points are ignored. Throws on duplicate points / singular systems.
ResidueVector interpolate_palindromic(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
    int degree, std::uint64_t prime);

// Unique nonnegative coefficient vector below the product of the slice
// primes that is congruent to every slice. When bound > 0, throws unless the
// prime product exceeds bound.
CountPolynomial crt_reconstruct(const std::vector<ResidueVector>& slices,
                                const BigInt& bound);

// A-priori bound ell^2 * k^steps on the largest coefficient of p(x).
BigInt height_bound(long ell, long k, int steps);

}  // namespace gerry
