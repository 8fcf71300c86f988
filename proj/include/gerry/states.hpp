#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gerry {

// One grid column, index 0 = top cell. 0 = white, 1 = black.
using ColumnColoring = std::vector<std::uint8_t>;

// Maximal run of equal-colored cells within a column.
struct Chunk {
    int begin;  // first cell
    int end;    // last cell, inclusive
    int color;
};

std::vector<Chunk> chunks(const ColumnColoring& c);

// Partition of the chunk indices of a column, encoded per chunk as the
// smallest chunk index of its block. leaders[i] <= i always.
using BlockLeaders = std::vector<int>;

// Number of distinct blocks of a leader encoding.
int block_count(const BlockLeaders& leaders);

struct State {
    ColumnColoring coloring;
    BlockLeaders leaders;
    bool primed = false;

    auto operator<=>(const State&) const = default;
};

// All partitions of the chunks into monochromatic blocks that are realizable
// by a one-sided non-crossing arc diagram (each vertex at most one incoming
// and one outgoing arc). The discrete partition is always included.
std::vector<BlockLeaders> enumerate_arc_configs(const std::vector<Chunk>& ch);

// True when the state can never be completed to the right: there are blocks
// A1, B1, A2 occupying consecutive cell intervals (A1 and A2 of one color,
// B1 of the other) and another block B2 of B1's color sticking out past A2
// or before A1.
bool is_uninteresting(const std::vector<Chunk>& ch, const BlockLeaders& leaders);

struct StateSpace {
    int row_count = 0;
    std::vector<State> states;          // sorted canonically
    std::map<State, int> index;

    int size() const { return static_cast<int>(states.size()); }
    int lookup(const State& s) const;   // -1 when absent
};

// The set L of interesting states for a column of r cells, plus the two
// primed monochromatic states. Throws std::invalid_argument for r < 1.
StateSpace build_state_space(int r);

// "gerrystates v1" text dump, one line per state, bit-exact across runs.
std::string dump_states(const StateSpace& space);

}  // namespace gerry
