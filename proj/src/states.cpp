#include "gerry/states.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gerry {

std::vector<Chunk> chunks(const ColumnColoring& c) {
    std::vector<Chunk> out;
    int r = static_cast<int>(c.size());
    int i = 0;
    while (i < r) {
        int j = i;
        while (j + 1 < r && c[j + 1] == c[i]) ++j;
        out.push_back({i, j, c[i]});
        i = j + 1;
    }
    return out;
}

int block_count(const BlockLeaders& leaders) {
    int cnt = 0;
    for (int i = 0; i < static_cast<int>(leaders.size()); ++i)
        if (leaders[i] == i) ++cnt;
    return cnt;
}

namespace {

// Arcs are stored as (lo, hi) pairs of chunk indices. A new arc (i, j) with
// i < j crosses an existing arc (a, b) exactly when a < i < b (all existing
// arcs end strictly before j).
bool arc_crosses(const std::vector<std::pair<int, int>>& arcs, int i) {
    for (auto [a, b] : arcs)
        if (a < i && i < b) return true;
    return false;
}

void gen_configs(const std::vector<Chunk>& ch, int j,
                 std::vector<int>& leader, std::vector<int>& last_of_block,
                 std::vector<std::pair<int, int>>& arcs,
                 std::vector<BlockLeaders>& out) {
    int k = static_cast<int>(ch.size());
    if (j == k) {
        out.push_back(leader);
        return;
    }
    // start a new block
    leader.push_back(j);
    last_of_block.push_back(j);
    gen_configs(ch, j + 1, leader, last_of_block, arcs, out);
    leader.pop_back();
    last_of_block.pop_back();

    // extend an existing block of the same color with an arc from its
    // last chunk (that chunk then has its one outgoing arc)
    for (int b = 0; b < j; ++b) {
        if (leader[b] != b) continue;
        int i = last_of_block[b];
        if (ch[i].color != ch[j].color) continue;
        if (arc_crosses(arcs, i)) continue;
        arcs.emplace_back(i, j);
        int saved = last_of_block[b];
        last_of_block[b] = j;
        leader.push_back(b);
        last_of_block.push_back(b);  // placeholder, unused for non-leaders
        gen_configs(ch, j + 1, leader, last_of_block, arcs, out);
        leader.pop_back();
        last_of_block.pop_back();
        last_of_block[b] = saved;
        arcs.pop_back();
    }
}

struct BlockInfo {
    int min_cell;
    int max_cell;
    int color;
};

std::vector<BlockInfo> block_infos(const std::vector<Chunk>& ch,
                                   const BlockLeaders& leaders,
                                   std::vector<int>& block_of_chunk) {
    int k = static_cast<int>(ch.size());
    std::vector<int> block_id(k, -1);
    std::vector<BlockInfo> blocks;
    block_of_chunk.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        int l = leaders[i];
        if (block_id[l] < 0) {
            block_id[l] = static_cast<int>(blocks.size());
            blocks.push_back({ch[i].begin, ch[i].end, ch[i].color});
        }
        auto& b = blocks[block_id[l]];
        b.min_cell = std::min(b.min_cell, ch[i].begin);
        b.max_cell = std::max(b.max_cell, ch[i].end);
        block_of_chunk[i] = block_id[l];
    }
    return blocks;
}

}  // namespace

std::vector<BlockLeaders> enumerate_arc_configs(const std::vector<Chunk>& ch) {
    std::vector<BlockLeaders> out;
    std::vector<int> leader, last_of_block;
    std::vector<std::pair<int, int>> arcs;
    gen_configs(ch, 0, leader, last_of_block, arcs, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_uninteresting(const std::vector<Chunk>& ch, const BlockLeaders& leaders) {
    std::vector<int> block_of_chunk;
    auto blocks = block_infos(ch, leaders, block_of_chunk);
    int r = ch.empty() ? 0 : ch.back().end + 1;
    std::vector<int> block_of_cell(r);
    for (int i = 0; i < static_cast<int>(ch.size()); ++i)
        for (int cell = ch[i].begin; cell <= ch[i].end; ++cell)
            block_of_cell[cell] = block_of_chunk[i];

    for (const auto& a1 : blocks) {
        if (a1.max_cell + 1 >= r) continue;
        const auto& b1 = blocks[block_of_cell[a1.max_cell + 1]];
        if (b1.min_cell != a1.max_cell + 1) continue;
        if (b1.max_cell + 1 >= r) continue;
        const auto& a2 = blocks[block_of_cell[b1.max_cell + 1]];
        if (a2.min_cell != b1.max_cell + 1) continue;
        for (const auto& b2 : blocks) {
            if (&b2 == &b1 || b2.color != b1.color) continue;
            if (a2.max_cell < b2.max_cell || b2.min_cell < a1.min_cell)
                return true;
        }
    }
    return false;
}

int StateSpace::lookup(const State& s) const {
    auto it = index.find(s);
    return it == index.end() ? -1 : it->second;
}

StateSpace build_state_space(int r) {
    if (r < 1) throw std::invalid_argument("row count must be >= 1");
    StateSpace sp;
    sp.row_count = r;
    for (long long bits = 0; bits < (1LL << r); ++bits) {
        ColumnColoring c(r);
        for (int i = 0; i < r; ++i)
            c[i] = static_cast<std::uint8_t>((bits >> (r - 1 - i)) & 1);
        auto ch = chunks(c);
        for (auto& leaders : enumerate_arc_configs(ch)) {
            if (is_uninteresting(ch, leaders)) continue;
            sp.states.push_back({c, leaders, false});
        }
    }
    // primed monochromatic states
    sp.states.push_back({ColumnColoring(r, 0), {0}, true});
    sp.states.push_back({ColumnColoring(r, 1), {0}, true});

    std::sort(sp.states.begin(), sp.states.end());
    for (int i = 0; i < sp.size(); ++i)
        sp.index.emplace(sp.states[i], i);
    if (static_cast<int>(sp.index.size()) != sp.size())
        throw std::logic_error("duplicate states generated");
    return sp;
}

std::string dump_states(const StateSpace& space) {
    std::ostringstream os;
    os << "gerrystates v1 r=" << space.row_count
       << " count=" << space.size() << '\n';
    for (int i = 0; i < space.size(); ++i) {
        const State& s = space.states[i];
        os << i << ' ';
        for (auto b : s.coloring) os << static_cast<int>(b);
        os << ' ';
        for (size_t j = 0; j < s.leaders.size(); ++j) {
            if (j) os << ',';
            os << s.leaders[j];
        }
        os << ' ' << (s.primed ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace gerry
