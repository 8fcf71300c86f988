#include "gerry/transfer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gerry {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

long long TransferSystem::nnz() const {
    long long n = 0;
    for (const auto& row : rows) n += static_cast<long long>(row.size());
    return n;
}

int TransferSystem::nnz_vinit() const {
    return static_cast<int>(std::count_if(vinit.begin(), vinit.end(),
                                          [](int e) { return e >= 0; }));
}

int TransferSystem::nnz_vfinal() const {
    return static_cast<int>(std::count(vfinal.begin(), vfinal.end(), 1));
}

std::optional<State> transition(const State& s, const ColumnColoring& cnew) {
    int r = static_cast<int>(s.coloring.size());
    if (static_cast<int>(cnew.size()) != r)
        throw std::invalid_argument("column length mismatch");

    if (s.primed) {
        if (cnew == s.coloring) return s;
        return std::nullopt;
    }

    auto old_ch = chunks(s.coloring);
    auto new_ch = chunks(cnew);
    int nold = static_cast<int>(old_ch.size());
    int nnew = static_cast<int>(new_ch.size());

    // dense block ids for the old partition
    std::vector<int> old_block(nold, -1);
    int nblocks = 0;
    for (int i = 0; i < nold; ++i)
        old_block[i] = (s.leaders[i] == i) ? nblocks++ : old_block[s.leaders[i]];

    std::vector<int> old_chunk_of_cell(r), new_chunk_of_cell(r);
    for (int i = 0; i < nold; ++i)
        for (int cell = old_ch[i].begin; cell <= old_ch[i].end; ++cell)
            old_chunk_of_cell[cell] = i;
    for (int i = 0; i < nnew; ++i)
        for (int cell = new_ch[i].begin; cell <= new_ch[i].end; ++cell)
            new_chunk_of_cell[cell] = i;

    // nodes: old blocks, then new chunks
    Dsu dsu(nblocks + nnew);
    std::vector<char> matched(nblocks, 0);
    for (int cell = 0; cell < r; ++cell) {
        if (s.coloring[cell] != cnew[cell]) continue;
        int b = old_block[old_chunk_of_cell[cell]];
        matched[b] = 1;
        dsu.unite(b, nblocks + new_chunk_of_cell[cell]);
    }

    int sealed = static_cast<int>(std::count(matched.begin(), matched.end(), 0));
    if (sealed > 0) {
        // sealing is only allowed when the new column is monochromatic and
        // exactly one block carried the vanished color
        if (nnew == 1 && sealed == 1)
            return State{cnew, {0}, true};
        return std::nullopt;
    }

    BlockLeaders leaders(nnew);
    std::vector<int> leader_of_root(nblocks + nnew, -1);
    for (int i = 0; i < nnew; ++i) {
        int root = dsu.find(nblocks + i);
        if (leader_of_root[root] < 0) leader_of_root[root] = i;
        leaders[i] = leader_of_root[root];
    }
    if (is_uninteresting(new_ch, leaders)) return std::nullopt;
    return State{cnew, leaders, false};
}

TransferSystem build_transfer(const StateSpace& space) {
    TransferSystem ts;
    ts.space = space;
    int ell = space.size();
    int r = space.row_count;
    ts.rows.assign(ell, {});
    ts.xdiag.assign(ell, 0);
    ts.vinit.assign(ell, -1);
    ts.vfinal.assign(ell, 0);

    for (int i = 0; i < ell; ++i) {
        const State& s = space.states[i];
        int whites = static_cast<int>(std::count(s.coloring.begin(),
                                                 s.coloring.end(), 0));
        ts.xdiag[i] = whites;
        ts.vfinal[i] = block_count(s.leaders) <= 2 ? 1 : 0;
        if (!s.primed) {
            bool discrete = true;
            for (int j = 0; j < static_cast<int>(s.leaders.size()); ++j)
                if (s.leaders[j] != j) { discrete = false; break; }
            if (discrete) ts.vinit[i] = whites;
        }
    }

    ColumnColoring cnew(r);
    for (int i = 0; i < ell; ++i) {
        const State& s = space.states[i];
        if (s.primed) {
            ts.rows[i].push_back(i);
            continue;
        }
        for (long long bits = 0; bits < (1LL << r); ++bits) {
            for (int j = 0; j < r; ++j)
                cnew[j] = static_cast<std::uint8_t>((bits >> (r - 1 - j)) & 1);
            auto succ = transition(s, cnew);
            if (!succ) continue;
            int t = space.lookup(*succ);
            if (t < 0) throw std::logic_error("successor not in state space");
            ts.rows[i].push_back(t);
        }
    }
    return ts;
}

int max_row_nnz(const TransferSystem& ts) {
    size_t k = 0;
    std::vector<long long> col_cnt(ts.space.size(), 0);
    for (const auto& row : ts.rows) {
        k = std::max(k, row.size());
        for (int t : row) ++col_cnt[t];
    }
    long long kc = 0;
    for (long long c : col_cnt) kc = std::max(kc, c);
    return static_cast<int>(std::max<long long>(static_cast<long long>(k), kc));
}

std::string dump_matrix(const TransferSystem& ts) {
    std::ostringstream os;
    os << "gerrymatrix v1 r=" << ts.space.row_count << " nnz=" << ts.nnz() << '\n';
    for (int i = 0; i < static_cast<int>(ts.rows.size()); ++i)
        for (int t : ts.rows[i]) os << i << ' ' << t << '\n';
    return os.str();
}

}  // namespace gerry
