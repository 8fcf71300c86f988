#pragma once

#include <string>
#include <vector>

namespace gerry {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Published sequence terms 2, 70, 80518, ... for n = 1..nmax.
CheckResult check_sequence_terms(int nmax, int threads);

// State counts and nonzero counts of v_init, v_final, M for n = 1..nmax.
CheckResult check_state_table(int nmax);

// Counting polynomials of the 2x1, 2x2, 2x3 boards.
CheckResult check_m2_series();

// Transfer engine vs. closed-form series for 3-row boards, terms 1..count.
CheckResult check_knuth_crosscheck(int count);

// Engine polynomial vs. brute-force histogram for all boards up to max_cells.
CheckResult check_oracle_equivalence(int max_cells);

// All three strategies agree on the target coefficient up to max_cells.
CheckResult check_strategy_agreement(int max_cells, int threads);

// Published height bound value plus bound-vs-actual for square boards r <= 8.
CheckResult check_height_bound();

// Structural properties: palindromicity, self-loops, column homogeneity,
// primed absorption, the seven-configuration column, interpolation round
// trips on random palindromic polynomials.
CheckResult check_property_suite(int interpolation_trials);

// quick: a fast subset; otherwise the full acceptance-level run.
std::vector<CheckResult> run_verification(bool quick, int threads);

}  // namespace gerry
