#include "gerry/verify.hpp"

#include <map>
#include <random>
#include <sstream>

#include "gerry/analytic.hpp"
#include "gerry/engine.hpp"
#include "gerry/oracle.hpp"

namespace gerry {

namespace {

struct TableRow {
    int states, vinit, vfinal, matrix;
};

// n = 1..5
const TableRow kTable[] = {
    {6, 4, 6, 16},
    {26, 14, 16, 178},
    {154, 32, 34, 2546},
    {1026, 58, 60, 44008},
    {7222, 92, 94, 832454},
};

const char* kTerms[] = {
    "2", "70", "80518", "7157114189", "49852157614583644",
    "28289358593043414725944353", "1335056579423080371186456888543732162",
};

const TransferSystem& cached_transfer(int r) {
    static std::map<int, TransferSystem> cache;
    auto it = cache.find(r);
    if (it == cache.end())
        it = cache.emplace(r, build_transfer(build_state_space(r))).first;
    return it->second;
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

}  // namespace

CheckResult check_sequence_terms(int nmax, int threads) {
    std::string name = "sequence terms n=1.." + std::to_string(nmax);
    for (int n = 1; n <= nmax; ++n) {
        Strategy st;
        st.kind = n >= 4 ? StrategyKind::modular_crt : StrategyKind::bigint_full;
        st.threads = threads;
        BigInt term = gerrymander_term(n, st);
        BigInt expected(kTerms[n - 1]);
        if (term != expected)
            return fail(name, "n=" + std::to_string(n) + ": got " +
                                  term.get_str() + ", expected " +
                                  expected.get_str());
    }
    return pass(name, "all terms match");
}

CheckResult check_state_table(int nmax) {
    std::string name = "state table n=1.." + std::to_string(nmax);
    for (int n = 1; n <= nmax; ++n) {
        const auto& ts = cached_transfer(2 * n);
        const auto& row = kTable[n - 1];
        std::ostringstream got;
        got << "n=" << n << ": (" << ts.space.size() << ',' << ts.nnz_vinit()
            << ',' << ts.nnz_vfinal() << ',' << ts.nnz() << ')';
        if (ts.space.size() != row.states || ts.nnz_vinit() != row.vinit ||
            ts.nnz_vfinal() != row.vfinal || ts.nnz() != row.matrix)
            return fail(name, got.str() + " does not match the published row");
    }
    return pass(name, "state and nonzero counts match");
}

CheckResult check_m2_series() {
    std::string name = "2-row counting polynomials";
    const std::vector<std::vector<long>> expected = {
        {1, 2, 1}, {1, 4, 4, 4, 1}, {1, 6, 6, 6, 6, 6, 1}};
    const auto& ts = cached_transfer(2);
    for (int w = 1; w <= 3; ++w) {
        auto p = count_polynomial(ts, {2, w, std::nullopt}, {});
        const auto& exp = expected[w - 1];
        bool ok = p.coeffs.size() == exp.size();
        for (size_t i = 0; ok && i < exp.size(); ++i)
            ok = p.coeffs[i] == exp[i];
        if (!ok)
            return fail(name, "2x" + std::to_string(w) + " polynomial mismatch");
    }
    return pass(name, "2x1, 2x2, 2x3 match");
}

CheckResult check_knuth_crosscheck(int count) {
    std::string name = "3-row series cross-check, " + std::to_string(count) +
                       " terms";
    auto engine_terms = fixed_m_sequence(3, count, {});
    auto series = knuth_series(count);
    for (int n = 1; n <= count; ++n)
        if (engine_terms[n - 1] != series[n])
            return fail(name, "n=" + std::to_string(n) + ": engine " +
                                  engine_terms[n - 1].get_str() + " vs series " +
                                  series[n].get_str());
    return pass(name, "engine and closed form agree");
}

CheckResult check_oracle_equivalence(int max_cells) {
    std::string name = "oracle equivalence up to " + std::to_string(max_cells) +
                       " cells";
    for (int m = 1; m * m <= max_cells; ++m) {
        for (int n = m; m * n <= max_cells; ++n) {
            auto histogram = oracle_histogram(m, n, 2).histogram;
            auto p = count_polynomial(cached_transfer(m), {m, n, std::nullopt}, {});
            int cells = m * n;
            std::string board = std::to_string(m) + "x" + std::to_string(n);
            if (p.coeff(0) != 1 || p.coeff(cells) != 1)
                return fail(name, board + ": boundary coefficients differ from 1");
            for (int a = 1; a < cells; ++a) {
                auto it = histogram.find({a});
                BigInt want = it == histogram.end()
                                  ? 0
                                  : BigInt(static_cast<long>(it->second));
                if (p.coeff(a) != want)
                    return fail(name, board + ": coefficient " +
                                          std::to_string(a) + " is " +
                                          p.coeff(a).get_str() + ", oracle " +
                                          want.get_str());
            }
        }
    }
    return pass(name, "all boards agree with the brute-force histogram");
}

CheckResult check_strategy_agreement(int max_cells, int threads) {
    std::string name = "strategy agreement up to " + std::to_string(max_cells) +
                       " cells";
    for (int m = 1; m * m <= max_cells; ++m) {
        for (int n = m; m * n <= max_cells; ++n) {
            BoardSpec spec{m, n, std::nullopt};
            const auto& ts = cached_transfer(m);
            auto full = count_polynomial(ts, spec, {});
            Strategy trunc{StrategyKind::bigint_truncated, true, std::nullopt, 1};
            auto truncated = count_polynomial(ts, spec, trunc);
            Strategy crt{StrategyKind::modular_crt, true, std::nullopt, threads};
            auto modular = count_polynomial(ts, spec, crt);
            modular.trim();
            std::string board = std::to_string(m) + "x" + std::to_string(n);
            long target = spec.target();
            if (full.coeff(target) != truncated.coeff(target))
                return fail(name, board + ": truncated strategy differs");
            if (full.coeffs != modular.coeffs)
                return fail(name, board + ": CRT strategy differs");
        }
    }
    return pass(name, "all three strategies agree");
}

CheckResult check_height_bound() {
    std::string name = "height bound";
    BigInt published = height_bound(393878, 16384, 12);
    std::string digits = published.get_str();
    if (digits.size() != 62 || digits.substr(0, 4) != "5804")
        return fail(name, "ell^2 k^12 = " + digits + ", expected 5.804e61");
    for (int r = 2; r <= 8; r += 2) {
        const auto& ts = cached_transfer(r);
        auto p = count_polynomial(ts, {r, r, std::nullopt}, {});
        BigInt bound = height_bound(ts.space.size(), max_row_nnz(ts), r - 2);
        for (const auto& c : p.coeffs)
            if (c > bound)
                return fail(name, "coefficient exceeds bound for the " +
                                      std::to_string(r) + "-row board");
    }
    return pass(name, "bound matches and dominates observed heights");
}

CheckResult check_property_suite(int interpolation_trials) {
    std::string name = "property suite";

    // seven arc configurations for the five-chunk column of size 8
    ColumnColoring sample = {0, 0, 1, 1, 1, 0, 1, 0};
    if (enumerate_arc_configs(chunks(sample)).size() != 7)
        return fail(name, "five-chunk column does not yield 7 configurations");

    for (int r = 1; r <= 6; ++r) {
        const auto& ts = cached_transfer(r);
        for (int i = 0; i < ts.space.size(); ++i) {
            const State& s = ts.space.states[i];
            auto self = transition(s, s.coloring);
            if (!self || *self != s)
                return fail(name, "missing self-loop at r=" + std::to_string(r));
            if (s.primed && ts.rows[i].size() != 1)
                return fail(name, "primed state is not absorbing");
            // column homogeneity / determinism: an edge into t can only be
            // produced by appending t's own column
            for (int t : ts.rows[i]) {
                const State& st = ts.space.states[t];
                auto succ = transition(s, st.coloring);
                if (!succ || *succ != st)
                    return fail(name, "edge does not reproduce its target state");
                if (ts.xdiag[t] !=
                    static_cast<int>(std::count(st.coloring.begin(),
                                                st.coloring.end(), 0)))
                    return fail(name, "xdiag mismatch");
            }
        }
    }

    // palindromicity of full polynomials
    for (int m = 1; m <= 4; ++m)
        for (int n = m; m * n <= 24; ++n) {
            auto p = count_polynomial(cached_transfer(m), {m, n, std::nullopt}, {});
            if (!p.is_palindromic(m * n))
                return fail(name, std::to_string(m) + "x" + std::to_string(n) +
                                      " polynomial is not palindromic");
        }

    // reachability from the start vector
    for (int r = 1; r <= 8; ++r) {
        const auto& ts = cached_transfer(r);
        std::vector<char> seen(ts.space.size(), 0);
        std::vector<int> stack;
        for (int s = 0; s < ts.space.size(); ++s)
            if (ts.vinit[s] >= 0) { seen[s] = 1; stack.push_back(s); }
        while (!stack.empty()) {
            int s = stack.back();
            stack.pop_back();
            for (int t : ts.rows[s])
                if (!seen[t]) { seen[t] = 1; stack.push_back(t); }
        }
        for (char f : seen)
            if (!f)
                return fail(name, "unreachable state at r=" + std::to_string(r));
    }

    // interpolation round trips on random palindromic polynomials
    std::mt19937_64 rng(20240817);
    auto primes = default_primes(8);
    for (int trial = 0; trial < interpolation_trials; ++trial) {
        std::uint64_t prime = primes[rng() % primes.size()];
        int degree = static_cast<int>(rng() % 17);
        std::vector<std::uint64_t> coeffs(degree + 1);
        for (int i = 0; i <= degree / 2; ++i)
            coeffs[i] = coeffs[degree - i] = rng() % prime;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
        for (int j = 1; j <= degree / 2 + 1; ++j) {
            std::uint64_t val = 0;
            for (int i = degree; i >= 0; --i)
                val = (static_cast<unsigned __int128>(val) * j + coeffs[i]) % prime;
            pts.emplace_back(j, val);
        }
        auto rec = interpolate_palindromic(pts, degree, prime);
        if (rec.values != coeffs)
            return fail(name, "interpolation round trip failed at trial " +
                                  std::to_string(trial));
    }

    return pass(name, "all structural properties hold");
}

std::vector<CheckResult> run_verification(bool quick, int threads) {
    std::vector<CheckResult> results;
    if (quick) {
        results.push_back(check_state_table(3));
        results.push_back(check_m2_series());
        results.push_back(check_sequence_terms(2, threads));
        results.push_back(check_knuth_crosscheck(10));
        results.push_back(check_oracle_equivalence(12));
        results.push_back(check_strategy_agreement(16, threads));
        results.push_back(check_height_bound());
        results.push_back(check_property_suite(200));
    } else {
        results.push_back(check_state_table(5));
        results.push_back(check_m2_series());
        results.push_back(check_sequence_terms(4, threads));
        results.push_back(check_knuth_crosscheck(20));
        results.push_back(check_oracle_equivalence(20));
        results.push_back(check_strategy_agreement(36, threads));
        results.push_back(check_height_bound());
        results.push_back(check_property_suite(1000));
    }
    return results;
}

}  // namespace gerry
