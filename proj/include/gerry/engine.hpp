#pragma once

#include <optional>
#include <vector>

#include "gerry/polyring.hpp"
#include "gerry/transfer.hpp"

namespace gerry {

enum class StrategyKind {
    bigint_full,       // exact polynomials over Z
    bigint_truncated,  // exact polynomials mod x^{target+1}
    modular_crt,       // evaluation-interpolation per prime + CRT
};

struct Strategy {
    StrategyKind kind = StrategyKind::bigint_full;
    bool certified = true;              // size the prime list from height_bound
    std::optional<int> prime_count;     // overrides the certified count
    int threads = 1;
};

struct BoardSpec {
    int rows = 1;
    int width = 1;
    std::optional<long> target_white_area;  // defaults to rows*width/2

    long target() const {
        return target_white_area ? *target_white_area
                                 : static_cast<long>(rows) * width / 2;
    }
};

struct PipelineStats {
    long matrix_products = 0;
    std::vector<std::uint64_t> primes_used;
    BigInt certified_bound = 0;
};

// p(x) = vinit^T * M^{width-1} * vfinal. For the truncated strategy only the
// coefficients up to the target area are meaningful; the CRT strategy
// reconstructs the full palindromic polynomial.
CountPolynomial count_polynomial(const TransferSystem& ts, const BoardSpec& spec,
                                 const Strategy& strategy,
                                 PipelineStats* stats = nullptr);

// Convenience overload that builds the state space and transfer system.
CountPolynomial count_polynomial(const BoardSpec& spec, const Strategy& strategy,
                                 PipelineStats* stats = nullptr);

// nth term of the gerrymander sequence: half the x^{2n^2} coefficient for the
// 2n x 2n board.
BigInt gerrymander_term(int n, const Strategy& strategy,
                        PipelineStats* stats = nullptr);

// a_1..a_count for boards with m rows: m x n boards when m is even
// (coefficient x^{nm/2}), m x 2n boards when m is odd (coefficient x^{nm}),
// halved. One running vector is extended column by column.
std::vector<BigInt> fixed_m_sequence(int m, int count, const Strategy& strategy);

}  // namespace gerry
