#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gerry/states.hpp"

namespace gerry {

// Sparse transfer system M = M' * X over a state space. mprime is boolean and
// stored row-major (row = source state); the x-powers live in xdiag, one
// exponent per target state (the number of white cells of its column).
struct TransferSystem {
    StateSpace space;
    std::vector<std::vector<int>> rows;   // sorted target ordinals per source
    std::vector<int> xdiag;               // #white(c) per state
    std::vector<int> vinit;               // start exponent, -1 when absent
    std::vector<std::uint8_t> vfinal;     // accept flag (|P| <= 2)

    long long nnz() const;
    int nnz_vinit() const;
    int nnz_vfinal() const;
};

// Successor of state s when column cnew is appended, or nullopt when the
// transition is forbidden (a region would be disconnected, a primed state is
// followed by a different column, or the successor is uninteresting).
// Throws std::invalid_argument on a length mismatch.
std::optional<State> transition(const State& s, const ColumnColoring& cnew);

TransferSystem build_transfer(const StateSpace& space);

// max over rows and columns of the nonzero count of M.
int max_row_nnz(const TransferSystem& ts);

// "gerrymatrix v1" text dump: header, then one "<src> <dst>" line per nonzero.
std::string dump_matrix(const TransferSystem& ts);

}  // namespace gerry
