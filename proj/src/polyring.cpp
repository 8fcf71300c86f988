#include "gerry/polyring.hpp"

#include <algorithm>
#include <stdexcept>

namespace gerry {

namespace {
const BigInt kZero = 0;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
    // m is prime
    return mod_pow(a % m, m - 2, m);
}

bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace

int CountPolynomial::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0) return i;
    return -1;
}

const BigInt& CountPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return kZero;
    return coeffs[i];
}

void CountPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

bool CountPolynomial::is_palindromic(int d) const {
    for (int i = 0; i <= d; ++i)
        if (coeff(i) != coeff(d - i)) return false;
    if (degree() > d) return false;
    return true;
}

CountPolynomial poly_add(const CountPolynomial& a, const CountPolynomial& b) {
    CountPolynomial out;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return out;
}

CountPolynomial truncated_mul(const CountPolynomial& a, const CountPolynomial& b,
                              long cap) {
    CountPolynomial out;
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return out;
    long deg = static_cast<long>(da) + db;
    if (cap >= 0) deg = std::min(deg, cap);
    out.coeffs.assign(deg + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (a.coeffs[i] == 0) continue;
        int jmax = std::min<long>(db, deg - i);
        for (int j = 0; j <= jmax; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mod_mul(result, base, mod);
        base = mod_mul(base, base, mod);
        exp >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> default_primes(int count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = (1ULL << 31) - 1; static_cast<int>(out.size()) < count; --p)
        if (is_prime_u32(p)) out.push_back(p);
    return out;
}

ResidueVector interpolate_palindromic(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points,
    int degree, std::uint64_t prime) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    int unknowns = degree / 2 + 1;
    if (static_cast<int>(points.size()) < unknowns)
        throw std::invalid_argument("not enough evaluation points");

    // row j: sum_i c_i * (x_j^i + x_j^{degree-i}) = value_j, with the middle
    // term unfolded once when degree is even
    std::vector<std::vector<std::uint64_t>> a(
        unknowns, std::vector<std::uint64_t>(unknowns + 1));
    for (int j = 0; j < unknowns; ++j) {
        std::uint64_t x = points[j].first % prime;
        if (x == 0) throw std::invalid_argument("evaluation point 0 not allowed");
        for (int i = 0; i < unknowns; ++i) {
            std::uint64_t lo = mod_pow(x, i, prime);
            std::uint64_t hi = mod_pow(x, degree - i, prime);
            a[j][i] = (i == degree - i) ? lo : (lo + hi) % prime;
        }
        a[j][unknowns] = points[j].second % prime;
    }

    // Gaussian elimination mod prime
    for (int col = 0; col < unknowns; ++col) {
        int piv = -1;
        for (int row = col; row < unknowns; ++row)
            if (a[row][col] != 0) { piv = row; break; }
        if (piv < 0)
            throw std::runtime_error("singular interpolation system (repeated points?)");
        std::swap(a[col], a[piv]);
        std::uint64_t inv = mod_inv(a[col][col], prime);
        for (int k = col; k <= unknowns; ++k) a[col][k] = mod_mul(a[col][k], inv, prime);
        for (int row = 0; row < unknowns; ++row) {
            if (row == col || a[row][col] == 0) continue;
            std::uint64_t f = a[row][col];
            for (int k = col; k <= unknowns; ++k) {
                std::uint64_t sub = mod_mul(f, a[col][k], prime);
                a[row][k] = (a[row][k] + prime - sub) % prime;
            }
        }
    }

    ResidueVector out;
    out.prime = prime;
    out.values.assign(degree + 1, 0);
    for (int i = 0; i < unknowns; ++i) {
        out.values[i] = a[i][unknowns];
        out.values[degree - i] = a[i][unknowns];
    }
    return out;
}

CountPolynomial crt_reconstruct(const std::vector<ResidueVector>& slices,
                                const BigInt& bound) {
    if (slices.empty()) throw std::invalid_argument("no residue slices");
    size_t len = slices[0].values.size();
    BigInt product = 1;
    for (size_t i = 0; i < slices.size(); ++i) {
        if (slices[i].values.size() != len)
            throw std::invalid_argument("slice length mismatch");
        for (size_t j = 0; j < i; ++j)
            if (slices[j].prime == slices[i].prime)
                throw std::invalid_argument("duplicate prime in CRT input");
        product *= static_cast<unsigned long>(slices[i].prime);
    }
    if (bound > 0 && product <= bound)
        throw std::invalid_argument("insufficient primes for the requested bound");

    // precompute product/p_i * ((product/p_i)^-1 mod p_i)
    std::vector<BigInt> basis(slices.size());
    for (size_t i = 0; i < slices.size(); ++i) {
        std::uint64_t p = slices[i].prime;
        BigInt mi = product / static_cast<unsigned long>(p);
        std::uint64_t mi_mod = mpz_fdiv_ui(mi.get_mpz_t(), p);
        std::uint64_t inv = mod_pow(mi_mod, p - 2, p);
        basis[i] = mi * static_cast<unsigned long>(inv);
    }

    CountPolynomial out;
    out.coeffs.assign(len, 0);
    for (size_t k = 0; k < len; ++k) {
        BigInt acc = 0;
        for (size_t i = 0; i < slices.size(); ++i)
            acc += basis[i] * static_cast<unsigned long>(slices[i].values[k]);
        out.coeffs[k] = acc % product;
    }
    return out;
}

BigInt height_bound(long ell, long k, int steps) {
    if (ell < 1 || k < 1 || steps < 0)
        throw std::invalid_argument("height_bound arguments out of range");
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(steps));
    return BigInt(ell) * ell * pw;
}

}  // namespace gerry
