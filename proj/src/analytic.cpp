#include "gerry/analytic.hpp"

#include <algorithm>
#include <stdexcept>

namespace gerry {

mpq_class RationalSeries::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c.size())) return 0;
    return c[i];
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (int i = 0; i < static_cast<int>(out.c.size()); ++i)
        out.c[i] = a.coeff(i) + b.coeff(i);
    return out;
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
    RationalSeries out;
    out.c.resize(std::max(a.c.size(), b.c.size()));
    for (int i = 0; i < static_cast<int>(out.c.size()); ++i)
        out.c[i] = a.coeff(i) - b.coeff(i);
    return out;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b,
                          int order) {
    RationalSeries out;
    out.c.assign(order + 1, 0);
    for (int i = 0; i <= order && i < static_cast<int>(a.c.size()); ++i) {
        if (a.c[i] == 0) continue;
        int jmax = std::min<int>(order - i, static_cast<int>(b.c.size()) - 1);
        for (int j = 0; j <= jmax; ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
}

RationalSeries series_inverse(const RationalSeries& a, int order) {
    if (a.c.empty() || a.c[0] == 0)
        throw std::invalid_argument("series has no inverse (zero constant term)");
    RationalSeries out;
    out.c.assign(order + 1, 0);
    out.c[0] = 1 / a.c[0];
    for (int k = 1; k <= order; ++k) {
        mpq_class acc = 0;
        int jmax = std::min<int>(k, static_cast<int>(a.c.size()) - 1);
        for (int j = 1; j <= jmax; ++j) acc += a.c[j] * out.c[k - j];
        out.c[k] = -acc / a.c[0];
    }
    return out;
}

RationalSeries sqrt_series(int order) {
    // binomial series (1-4x)^{1/2}: c_0 = 1,
    // c_k = c_{k-1} * (-4) * (1/2 - (k-1)) / k
    RationalSeries out;
    out.c.assign(order + 1, 0);
    out.c[0] = 1;
    for (int k = 1; k <= order; ++k) {
        mpq_class factor = mpq_class(1, 2) - (k - 1);
        out.c[k] = out.c[k - 1] * -4 * factor / k;
    }
    return out;
}

std::vector<BigInt> knuth_series(int order) {
    if (order < 0) throw std::invalid_argument("negative order");
    int n = order;
    auto s = sqrt_series(n);

    RationalSeries one_plus_s = s;
    one_plus_s.c[0] += 1;

    RationalSeries s_plus_x = s;
    if (n >= 1) s_plus_x.c[1] += 1;

    auto denom = series_mul(s_plus_x, s_plus_x, n);
    auto main_part = series_mul(one_plus_s, series_inverse(denom, n), n);
    main_part = series_mul(main_part, series_inverse(s, n), n);

    RationalSeries numer;  // 1 - x^2 + 2x^3
    numer.c.assign(std::min(n, 3) + 1, 0);
    numer.c[0] = 1;
    if (n >= 2) numer.c[2] = -1;
    if (n >= 3) numer.c[3] = 2;
    RationalSeries one_minus_x;
    one_minus_x.c = {1, -1};
    if (n == 0) one_minus_x.c.pop_back();
    auto cube = series_mul(series_mul(one_minus_x, one_minus_x, n), one_minus_x, n);
    auto correction = series_mul(numer, series_inverse(cube, n), n);

    auto f = series_sub(main_part, correction);
    std::vector<BigInt> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        mpq_class v = f.coeff(i);
        v.canonicalize();
        if (v.get_den() != 1)
            throw std::logic_error("non-integer series coefficient");
        out[i] = v.get_num();
    }
    return out;
}

}  // namespace gerry
