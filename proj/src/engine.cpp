#include "gerry/engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace gerry {

namespace {

// one vector-matrix step over big-integer polynomials: (v * M') * X,
// truncated beyond cap
std::vector<CountPolynomial> poly_step(const TransferSystem& ts,
                                       const std::vector<CountPolynomial>& v,
                                       long cap) {
    int ell = ts.space.size();
    std::vector<CountPolynomial> nv(ell);
    for (int s = 0; s < ell; ++s) {
        if (v[s].coeffs.empty()) continue;
        for (int t : ts.rows[s]) {
            auto& acc = nv[t].coeffs;
            const auto& src = v[s].coeffs;
            if (acc.size() < src.size()) acc.resize(src.size());
            for (size_t i = 0; i < src.size(); ++i) acc[i] += src[i];
        }
    }
    for (int t = 0; t < ell; ++t) {
        auto& c = nv[t].coeffs;
        if (c.empty()) continue;
        int e = ts.xdiag[t];
        long len = std::min<long>(static_cast<long>(c.size()) + e, cap + 1);
        std::vector<BigInt> shifted(std::max<long>(len, 0));
        for (long i = 0; i + e < len; ++i) shifted[i + e] = std::move(c[i]);
        c = std::move(shifted);
    }
    return nv;
}

std::vector<CountPolynomial> poly_init(const TransferSystem& ts, long cap) {
    std::vector<CountPolynomial> v(ts.space.size());
    for (int s = 0; s < ts.space.size(); ++s) {
        int e = ts.vinit[s];
        if (e < 0 || e > cap) continue;
        v[s].coeffs.assign(e + 1, 0);
        v[s].coeffs[e] = 1;
    }
    return v;
}

CountPolynomial poly_accept(const TransferSystem& ts,
                            const std::vector<CountPolynomial>& v) {
    CountPolynomial p;
    for (int s = 0; s < ts.space.size(); ++s)
        if (ts.vfinal[s]) p = poly_add(p, v[s]);
    p.trim();
    return p;
}

// scalar pipeline at x = x0 modulo prime
struct ScalarRun {
    const TransferSystem& ts;
    std::uint64_t prime;
    std::vector<std::uint64_t> xpow;  // x0^{xdiag[t]} per state
    std::vector<std::uint64_t> v;

    ScalarRun(const TransferSystem& t, std::uint64_t p, std::uint64_t x0)
        : ts(t), prime(p) {
        int ell = ts.space.size();
        xpow.resize(ell);
        v.assign(ell, 0);
        for (int s = 0; s < ell; ++s) {
            xpow[s] = mod_pow(x0, ts.xdiag[s], prime);
            if (ts.vinit[s] >= 0) v[s] = mod_pow(x0, ts.vinit[s], prime);
        }
    }

    void step() {
        std::vector<std::uint64_t> nv(v.size(), 0);
        for (size_t s = 0; s < v.size(); ++s) {
            if (v[s] == 0) continue;
            for (int t : ts.rows[s]) {
                nv[t] += v[s];
                if (nv[t] >= prime) nv[t] -= prime;
            }
        }
        for (size_t t = 0; t < v.size(); ++t)
            v[t] = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(nv[t]) * xpow[t] % prime);
    }

    std::uint64_t accept() const {
        std::uint64_t acc = 0;
        for (size_t s = 0; s < v.size(); ++s)
            if (ts.vfinal[s]) {
                acc += v[s];
                if (acc >= prime) acc -= prime;
            }
        return acc;
    }
};

std::vector<std::uint64_t> pick_primes(const TransferSystem& ts, int width,
                                       const Strategy& strategy,
                                       BigInt& bound_out) {
    BigInt bound = height_bound(ts.space.size(),
                                std::max(1, max_row_nnz(ts)),
                                std::max(0, width - 2));
    bound_out = bound;
    if (strategy.prime_count) {
        if (*strategy.prime_count < 1)
            throw std::invalid_argument("prime count must be >= 1");
        return default_primes(*strategy.prime_count);
    }
    int count = 1;
    for (;;) {
        auto primes = default_primes(count);
        BigInt product = 1;
        for (auto p : primes) product *= static_cast<unsigned long>(p);
        if (product > bound) return primes;
        ++count;
    }
}

void run_tasks_impl(int ntasks, int threads,
                    const std::function<void(int)>& task) {
    threads = std::max(1, threads);
    if (threads == 1 || ntasks <= 1) {
        for (int i = 0; i < ntasks; ++i) task(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < ntasks; i += threads) task(i);
        });
    for (auto& t : pool) t.join();
}

CountPolynomial modular_pipeline(const TransferSystem& ts, const BoardSpec& spec,
                                 const Strategy& strategy, PipelineStats* stats) {
    int degree = spec.rows * spec.width;
    int npts = degree / 2 + 1;
    BigInt bound;
    auto primes = pick_primes(ts, spec.width, strategy, bound);
    if (stats) {
        stats->primes_used = primes;
        stats->matrix_products = spec.width - 1;
        stats->certified_bound = bound;
    }

    int np = static_cast<int>(primes.size());
    std::vector<std::vector<std::uint64_t>> values(
        np, std::vector<std::uint64_t>(npts));
    run_tasks_impl(np * npts, strategy.threads, [&](int id) {
        int pi = id / npts;
        std::uint64_t x0 = static_cast<std::uint64_t>(id % npts) + 1;
        ScalarRun run(ts, primes[pi], x0);
        for (int step = 1; step < spec.width; ++step) run.step();
        values[pi][id % npts] = run.accept();
    });

    std::vector<ResidueVector> slices;
    for (int pi = 0; pi < np; ++pi) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        for (int j = 0; j < npts; ++j)
            pts.emplace_back(static_cast<std::uint64_t>(j) + 1, values[pi][j]);
        slices.push_back(interpolate_palindromic(pts, degree, primes[pi]));
    }
    bool check_bound = strategy.certified && !strategy.prime_count;
    return crt_reconstruct(slices, check_bound ? bound : BigInt(0));
}

BigInt half_coeff(const CountPolynomial& p, long idx) {
    BigInt c = p.coeff(static_cast<int>(idx));
    if (mpz_odd_p(c.get_mpz_t()))
        throw std::logic_error("expected an even coefficient");
    return c / 2;
}

}  // namespace

CountPolynomial count_polynomial(const TransferSystem& ts, const BoardSpec& spec,
                                 const Strategy& strategy, PipelineStats* stats) {
    if (spec.width < 1) throw std::invalid_argument("board width must be >= 1");
    if (spec.rows != ts.space.row_count)
        throw std::invalid_argument("transfer system row count mismatch");
    long cells = static_cast<long>(spec.rows) * spec.width;
    if (spec.target() < 0 || spec.target() > cells)
        throw std::invalid_argument("target area exceeds the board");

    switch (strategy.kind) {
        case StrategyKind::bigint_full:
        case StrategyKind::bigint_truncated: {
            long cap = strategy.kind == StrategyKind::bigint_truncated
                           ? spec.target()
                           : cells;
            auto v = poly_init(ts, cap);
            for (int step = 1; step < spec.width; ++step) {
                v = poly_step(ts, v, cap);
                if (stats) ++stats->matrix_products;
            }
            return poly_accept(ts, v);
        }
        case StrategyKind::modular_crt:
            return modular_pipeline(ts, spec, strategy, stats);
    }
    throw std::logic_error("unknown strategy");
}

CountPolynomial count_polynomial(const BoardSpec& spec, const Strategy& strategy,
                                 PipelineStats* stats) {
    auto ts = build_transfer(build_state_space(spec.rows));
    return count_polynomial(ts, spec, strategy, stats);
}

BigInt gerrymander_term(int n, const Strategy& strategy, PipelineStats* stats) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    BoardSpec spec{2 * n, 2 * n, std::nullopt};
    auto p = count_polynomial(spec, strategy, stats);
    return half_coeff(p, 2L * n * n);
}

std::vector<BigInt> fixed_m_sequence(int m, int count, const Strategy& strategy) {
    if (m < 1 || count < 1)
        throw std::invalid_argument("m and count must be >= 1");
    auto ts = build_transfer(build_state_space(m));
    bool even = m % 2 == 0;
    int max_width = even ? count : 2 * count;
    long final_target = even ? static_cast<long>(count) * m / 2
                             : static_cast<long>(count) * m;

    std::vector<BigInt> out;
    if (strategy.kind == StrategyKind::modular_crt) {
        int max_degree = m * max_width;
        int npts = max_degree / 2 + 1;
        BigInt bound;
        auto primes = pick_primes(ts, max_width, strategy, bound);
        int np = static_cast<int>(primes.size());
        // per task: the accept value at every width that gets read
        std::vector<std::vector<std::uint64_t>> values(
            static_cast<size_t>(np) * npts,
            std::vector<std::uint64_t>(count));
        run_tasks_impl(np * npts, strategy.threads, [&](int id) {
            std::uint64_t x0 = static_cast<std::uint64_t>(id % npts) + 1;
            ScalarRun run(ts, primes[id / npts], x0);
            for (int w = 1; w <= max_width; ++w) {
                if (w > 1) run.step();
                if (even || w % 2 == 0)
                    values[id][even ? w - 1 : w / 2 - 1] = run.accept();
            }
        });
        for (int n = 1; n <= count; ++n) {
            int degree = even ? m * n : m * 2 * n;
            int need = degree / 2 + 1;
            std::vector<ResidueVector> slices;
            for (int pi = 0; pi < np; ++pi) {
                std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
                for (int j = 0; j < need; ++j)
                    pts.emplace_back(
                        static_cast<std::uint64_t>(j) + 1,
                        values[static_cast<size_t>(pi) * npts + j][n - 1]);
                slices.push_back(interpolate_palindromic(pts, degree, primes[pi]));
            }
            auto p = crt_reconstruct(slices, 0);
            out.push_back(half_coeff(p, even ? static_cast<long>(n) * m / 2
                                             : static_cast<long>(n) * m));
        }
        return out;
    }

    long cap = strategy.kind == StrategyKind::bigint_truncated
                   ? final_target
                   : static_cast<long>(m) * max_width;
    auto v = poly_init(ts, cap);
    for (int w = 1; w <= max_width; ++w) {
        if (w > 1) v = poly_step(ts, v, cap);
        if (even || w % 2 == 0) {
            auto p = poly_accept(ts, v);
            long n = even ? w : w / 2;
            out.push_back(half_coeff(p, even ? n * m / 2 : n * m));
        }
    }
    return out;
}

}  // namespace gerry
