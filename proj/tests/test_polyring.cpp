#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gerry/polyring.hpp"

using namespace gerry;

namespace {

CountPolynomial make(std::vector<long> c) {
    CountPolynomial p;
    for (long v : c) p.coeffs.emplace_back(v);
    return p;
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& coeffs,
                       std::uint64_t x, std::uint64_t prime) {
    std::uint64_t val = 0;
    for (int i = (int)coeffs.size() - 1; i >= 0; --i)
        val = (static_cast<unsigned __int128>(val) * x + coeffs[i]) % prime;
    return val;
}

}  // namespace

TEST_CASE("truncated multiplication") {
    auto p = truncated_mul(make({1, 1}), make({1, 1}), 1);
    CHECK(p.coeffs == make({1, 2}).coeffs);

    auto q = truncated_mul(make({1, 2, 1}), make({1, 2, 1}), 4);
    CHECK(q.coeffs == make({1, 4, 6, 4, 1}).coeffs);

    SUBCASE("no-cap product equals schoolbook, truncation is a prefix") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            CountPolynomial a, b;
            for (int i = 0; i < (int)(1 + rng() % 6); ++i)
                a.coeffs.emplace_back((long)(rng() % 100));
            for (int i = 0; i < (int)(1 + rng() % 6); ++i)
                b.coeffs.emplace_back((long)(rng() % 100));
            auto full = truncated_mul(a, b, -1);
            long cap = (long)(rng() % 8);
            auto capped = truncated_mul(a, b, cap);
            for (long i = 0; i <= cap; ++i)
                CHECK(capped.coeff((int)i) == full.coeff((int)i));
            CHECK(capped.degree() <= cap);
        }
    }
    SUBCASE("truncation commutes with addition") {
        auto a = make({3, 1, 4, 1, 5});
        auto b = make({2, 7, 1, 8});
        auto c = make({1, 6, 1, 8, 0, 3});
        auto lhs = truncated_mul(poly_add(a, b), c, 3);
        auto rhs = poly_add(truncated_mul(a, c, 3), truncated_mul(b, c, 3));
        rhs.trim();
        lhs.trim();
        CHECK(lhs.coeffs == rhs.coeffs);
    }
}

TEST_CASE("palindromic interpolation") {
    SUBCASE("degree-4 example mod 101") {
        std::vector<std::uint64_t> coeffs = {1, 4, 4, 4, 1};
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        for (std::uint64_t x = 1; x <= 3; ++x)
            pts.emplace_back(x, eval_mod(coeffs, x, 101));
        auto rec = interpolate_palindromic(pts, 4, 101);
        CHECK(rec.values == coeffs);
    }
    SUBCASE("random palindromic of degree 8 mod 2^31-1 from 5 points") {
        std::uint64_t prime = (1ULL << 31) - 1;
        std::mt19937_64 rng(5);
        std::vector<std::uint64_t> coeffs(9);
        for (int i = 0; i <= 4; ++i) coeffs[i] = coeffs[8 - i] = rng() % prime;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        for (std::uint64_t x = 1; x <= 5; ++x)
            pts.emplace_back(x, eval_mod(coeffs, x, prime));
        auto rec = interpolate_palindromic(pts, 8, prime);
        CHECK(rec.values == coeffs);
    }
    SUBCASE("odd degree") {
        std::vector<std::uint64_t> coeffs = {2, 5, 5, 2};
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts = {
            {1, eval_mod(coeffs, 1, 101)}, {2, eval_mod(coeffs, 2, 101)}};
        auto rec = interpolate_palindromic(pts, 3, 101);
        CHECK(rec.values == coeffs);
    }
    SUBCASE("errors") {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> two = {{1, 1}, {2, 2}};
        CHECK_THROWS_AS(interpolate_palindromic(two, 8, 101),
                        std::invalid_argument);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> dup = {
            {1, 1}, {1, 1}, {2, 4}};
        CHECK_THROWS_AS(interpolate_palindromic(dup, 4, 101), std::runtime_error);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> zero = {
            {0, 1}, {1, 1}, {2, 4}};
        CHECK_THROWS_AS(interpolate_palindromic(zero, 4, 101),
                        std::invalid_argument);
    }
}

TEST_CASE("CRT reconstruction") {
    auto slice = [](std::uint64_t prime, const BigInt& v) {
        ResidueVector rv;
        rv.prime = prime;
        rv.values = {mpz_fdiv_ui(v.get_mpz_t(), prime)};
        return rv;
    };

    CHECK(crt_reconstruct({slice(101, 70), slice(103, 70)}, 0).coeffs[0] == 70);

    BigInt big("7157114189");
    auto primes = default_primes(4);
    std::vector<ResidueVector> slices;
    for (auto p : primes) slices.push_back(slice(p, big));
    CHECK(crt_reconstruct(slices, big).coeffs[0] == big);

    CHECK(crt_reconstruct({slice(101, 0), slice(103, 0)}, 0).coeffs[0] == 0);

    SUBCASE("insufficient primes") {
        BigInt bound("1000000");
        CHECK_THROWS_AS(crt_reconstruct({slice(101, 70)}, bound),
                        std::invalid_argument);
    }
    SUBCASE("duplicate primes") {
        CHECK_THROWS_AS(crt_reconstruct({slice(101, 1), slice(101, 1)}, 0),
                        std::invalid_argument);
    }
}

TEST_CASE("default primes") {
    auto primes = default_primes(8);
    REQUIRE(primes.size() == 8);
    CHECK(primes[0] == (1ULL << 31) - 1);
    for (size_t i = 0; i < primes.size(); ++i) {
        CHECK(primes[i] < (1ULL << 31));
        if (i) CHECK(primes[i] < primes[i - 1]);
        for (std::uint64_t d = 2; d * d <= primes[i]; ++d)
            CHECK(primes[i] % d != 0);
    }
}

TEST_CASE("height bound") {
    BigInt b = height_bound(393878, 16384, 12);
    std::string s = b.get_str();
    CHECK(s.size() == 62);          // ~5.804e61
    CHECK(s.substr(0, 4) == "5804");
    CHECK(height_bound(1, 1, 100) == 1);
    CHECK(height_bound(3, 2, 3) == 72);
    CHECK_THROWS_AS(height_bound(0, 1, 1), std::invalid_argument);
}
