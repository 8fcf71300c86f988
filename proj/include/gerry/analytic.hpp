#pragma once

#include <gmpxx.h>

#include <vector>

#include "gerry/polyring.hpp"

namespace gerry {

// Truncated power series with exact rational coefficients, c[i] = [x^i].
struct RationalSeries {
    std::vector<mpq_class> c;

    int order() const { return static_cast<int>(c.size()) - 1; }
    mpq_class coeff(int i) const;
};

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b, int order);

// Multiplicative inverse, requires c[0] != 0.
RationalSeries series_inverse(const RationalSeries& a, int order);

// sqrt(1-4x) + O(x^{order+1}): 1 - 2x - 2x^2 - 4x^3 - 10x^4 - ...
RationalSeries sqrt_series(int order);

// Coefficients a_0..a_order of
//   (1+sqrt(1-4x)) / (sqrt(1-4x)+x)^2 / sqrt(1-4x) - (1-x^2+2x^3)/(1-x)^3,
// the counting series for splitting a 3 x 2n board into two equal halves.
// Throws std::logic_error if a coefficient comes out non-integral.
std::vector<BigInt> knuth_series(int order);

}  // namespace gerry
