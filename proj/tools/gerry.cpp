#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gerry/analytic.hpp"
#include "gerry/engine.hpp"
#include "gerry/oracle.hpp"
#include "gerry/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CommonOpts {
    std::string strategy = "full";
    std::optional<int> primes;
    bool certified = false;
    int threads = 1;
    std::string dump_states_path;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--strategy", opts.strategy, "full, trunc, or crt")
        ->check(CLI::IsMember({"full", "trunc", "crt"}));
    cmd->add_option("--primes", opts.primes, "fixed number of CRT primes");
    cmd->add_flag("--certified", opts.certified,
                  "size the prime list from the height bound");
    cmd->add_option("--threads", opts.threads, "worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--dump-states", opts.dump_states_path,
                    "write the state-space dump to this path");
}

gerry::Strategy make_strategy(const CommonOpts& opts) {
    gerry::Strategy st;
    if (opts.strategy == "trunc") st.kind = gerry::StrategyKind::bigint_truncated;
    if (opts.strategy == "crt") st.kind = gerry::StrategyKind::modular_crt;
    st.certified = opts.certified || !opts.primes;
    st.prime_count = opts.primes;
    st.threads = opts.threads;
    return st;
}

json stats_json(const gerry::TransferSystem& ts, const gerry::PipelineStats& st) {
    json out;
    out["states"] = ts.space.size();
    out["nnz_vinit"] = ts.nnz_vinit();
    out["nnz_vfinal"] = ts.nnz_vfinal();
    out["nnz_matrix"] = ts.nnz();
    out["max_row_nnz"] = gerry::max_row_nnz(ts);
    out["matrix_products"] = st.matrix_products;
    if (st.certified_bound > 0)
        out["height_bound"] = st.certified_bound.get_str();
    return out;
}

json strategy_json(const CommonOpts& opts, const gerry::PipelineStats& st) {
    json out;
    out["kind"] = opts.strategy;
    out["certified"] = opts.certified || !opts.primes;
    json primes = json::array();
    for (auto p : st.primes_used) primes.push_back(p);
    out["primes"] = primes;
    out["threads"] = opts.threads;
    return out;
}

void maybe_dump_states(const CommonOpts& opts, const gerry::StateSpace& space) {
    if (opts.dump_states_path.empty()) return;
    std::ofstream f(opts.dump_states_path);
    if (!f) throw std::invalid_argument("cannot write " + opts.dump_states_path);
    f << gerry::dump_states(space);
}

int run(int argc, char** argv) {
    CLI::App app{"gerrymander dissection counting engine"};
    app.require_subcommand(1);

    // states
    auto* states_cmd = app.add_subcommand("states", "enumerate column states");
    int states_r = 0;
    std::string states_out;
    states_cmd->add_option("r", states_r, "number of rows")->required();
    states_cmd->add_option("--out", states_out, "dump file path");

    // term
    auto* term_cmd = app.add_subcommand("term", "one gerrymander sequence term");
    int term_n = 0;
    CommonOpts term_opts;
    term_cmd->add_option("n", term_n, "board is 2n x 2n")->required();
    add_common(term_cmd, term_opts);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "full counting polynomial");
    int poly_m = 0, poly_n = 0;
    CommonOpts poly_opts;
    poly_cmd->add_option("m", poly_m, "rows")->required();
    poly_cmd->add_option("n", poly_n, "columns")->required();
    add_common(poly_cmd, poly_opts);

    // sequence
    auto* seq_cmd = app.add_subcommand("sequence", "fixed-m sequence terms");
    int seq_m = 0, seq_count = 0;
    bool seq_check = false;
    CommonOpts seq_opts;
    seq_cmd->add_option("m", seq_m, "rows")->required();
    seq_cmd->add_option("N", seq_count, "number of terms")->required();
    seq_cmd->add_flag("--check-analytic", seq_check,
                      "compare against the closed-form series (m=3 only)");
    add_common(seq_cmd, seq_opts);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force histogram");
    int om = 0, on = 0, oq = 2;
    oracle_cmd->add_option("m", om, "rows")->required();
    oracle_cmd->add_option("n", on, "columns")->required();
    oracle_cmd->add_option("q", oq, "number of colors")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the self-check suite");
    std::string verify_level = "quick";
    int verify_threads = 1;
    verify_cmd->add_option("level", verify_level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--threads", verify_threads, "worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    if (*states_cmd) {
        auto space = gerry::build_state_space(states_r);
        auto dump = gerry::dump_states(space);
        auto ts = gerry::build_transfer(space);
        if (!states_out.empty()) {
            std::ofstream f(states_out);
            if (!f) throw std::invalid_argument("cannot write " + states_out);
            f << dump;
            json report;
            report["command"] = "states";
            report["r"] = states_r;
            report["out"] = states_out;
            report["stats"] = stats_json(ts, {});
            report["wall_ms"] = elapsed_ms();
            std::cout << report.dump(2) << '\n';
        } else {
            std::cout << dump;
        }
        std::cerr << "r=" << states_r << " states=" << space.size()
                  << " nnz_vinit=" << ts.nnz_vinit()
                  << " nnz_vfinal=" << ts.nnz_vfinal()
                  << " nnz_matrix=" << ts.nnz() << '\n';
        return 0;
    }

    if (*term_cmd) {
        auto st = make_strategy(term_opts);
        auto space = gerry::build_state_space(2 * term_n);
        auto ts = gerry::build_transfer(space);
        maybe_dump_states(term_opts, space);
        gerry::PipelineStats stats;
        gerry::BoardSpec spec{2 * term_n, 2 * term_n, std::nullopt};
        auto p = gerry::count_polynomial(ts, spec, st, &stats);
        gerry::BigInt half = p.coeff(static_cast<int>(spec.target())) / 2;
        json report;
        report["command"] = "term";
        report["n"] = term_n;
        report["board"] = {{"rows", 2 * term_n}, {"width", 2 * term_n}};
        report["strategy"] = strategy_json(term_opts, stats);
        report["result"] = half.get_str();
        report["stats"] = stats_json(ts, stats);
        report["wall_ms"] = elapsed_ms();
        std::cout << report.dump(2) << '\n';
        std::cerr << "term(" << term_n << ") = " << half.get_str() << '\n';
        return 0;
    }

    if (*poly_cmd) {
        auto st = make_strategy(poly_opts);
        auto space = gerry::build_state_space(poly_m);
        auto ts = gerry::build_transfer(space);
        maybe_dump_states(poly_opts, space);
        gerry::PipelineStats stats;
        gerry::BoardSpec spec{poly_m, poly_n, std::nullopt};
        auto p = gerry::count_polynomial(ts, spec, st, &stats);
        json coeffs = json::array();
        int degree = st.kind == gerry::StrategyKind::bigint_truncated
                         ? static_cast<int>(spec.target())
                         : poly_m * poly_n;
        for (int i = 0; i <= degree; ++i) coeffs.push_back(p.coeff(i).get_str());
        json report;
        report["command"] = "poly";
        report["board"] = {{"rows", poly_m}, {"width", poly_n}};
        report["strategy"] = strategy_json(poly_opts, stats);
        report["result"] = coeffs;
        report["stats"] = stats_json(ts, stats);
        report["wall_ms"] = elapsed_ms();
        std::cout << report.dump(2) << '\n';
        std::cerr << poly_m << "x" << poly_n << ": " << coeffs.dump() << '\n';
        return 0;
    }

    if (*seq_cmd) {
        auto st = make_strategy(seq_opts);
        auto terms = gerry::fixed_m_sequence(seq_m, seq_count, st);
        json out = json::array();
        for (const auto& t : terms) out.push_back(t.get_str());
        json report;
        report["command"] = "sequence";
        report["m"] = seq_m;
        report["count"] = seq_count;
        report["result"] = out;
        if (seq_check) {
            if (seq_m != 3)
                throw std::invalid_argument("--check-analytic requires m=3");
            auto series = gerry::knuth_series(seq_count);
            bool ok = true;
            for (int n = 1; n <= seq_count; ++n)
                if (terms[n - 1] != series[n]) ok = false;
            report["analytic_match"] = ok;
            if (!ok) {
                std::cout << report.dump(2) << '\n';
                std::cerr << "analytic cross-check FAILED\n";
                return 1;
            }
        }
        report["wall_ms"] = elapsed_ms();
        std::cout << report.dump(2) << '\n';
        std::cerr << "sequence m=" << seq_m << ": " << out.dump() << '\n';
        return 0;
    }

    if (*oracle_cmd) {
        auto result = gerry::oracle_histogram(om, on, oq);
        json hist;
        for (const auto& [key, count] : result.histogram) {
            std::string k;
            for (size_t i = 0; i < key.size(); ++i) {
                if (i) k += ',';
                k += std::to_string(key[i]);
            }
            hist[k] = count;
        }
        json report;
        report["command"] = "oracle";
        report["board"] = {{"rows", om}, {"width", on}};
        report["q"] = oq;
        report["histogram"] = hist;
        report["wall_ms"] = elapsed_ms();
        std::cout << report.dump(2) << '\n';
        return 0;
    }

    if (*verify_cmd) {
        auto results = gerry::run_verification(verify_level == "quick",
                                               verify_threads);
        json checks = json::array();
        int failures = 0;
        for (const auto& r : results) {
            std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": "
                      << r.detail << '\n';
            checks.push_back({{"name", r.name}, {"pass", r.pass},
                              {"detail", r.detail}});
            if (!r.pass) ++failures;
        }
        json report;
        report["command"] = "verify";
        report["level"] = verify_level;
        report["checks"] = checks;
        report["failures"] = failures;
        report["wall_ms"] = elapsed_ms();
        std::cout << report.dump(2) << '\n';
        return failures == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gerry::ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
