#include "gerry/oracle.hpp"

#include <algorithm>
#include <cstdint>

namespace gerry {

namespace {

// every cell of the given color reachable from `start` by 4-adjacency
int flood_count(const std::vector<std::uint8_t>& grid, int m, int n,
                int start, std::vector<std::uint8_t>& seen,
                std::vector<int>& stack) {
    std::uint8_t color = grid[start];
    int count = 0;
    stack.clear();
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
        int cell = stack.back();
        stack.pop_back();
        ++count;
        int row = cell / n, col = cell % n;
        int nbr[4] = {cell - n, cell + n, cell - 1, cell + 1};
        bool ok[4] = {row > 0, row + 1 < m, col > 0, col + 1 < n};
        for (int d = 0; d < 4; ++d) {
            if (!ok[d]) continue;
            int c2 = nbr[d];
            if (!seen[c2] && grid[c2] == color) {
                seen[c2] = 1;
                stack.push_back(c2);
            }
        }
    }
    return count;
}

}  // namespace

OracleResult oracle_histogram(int m, int n, int q) {
    if (m < 1 || n < 1 || q < 1)
        throw std::invalid_argument("oracle arguments must be >= 1");
    int cells = m * n;
    double total = 1;
    for (int i = 0; i < cells; ++i) {
        total *= q;
        if (total > static_cast<double>(1 << 30))
            throw ResourceGuardError("q^(m*n) exceeds the 2^30 guard");
    }

    OracleResult result;
    result.m = m;
    result.n = n;
    result.q = q;

    std::vector<std::uint8_t> grid(cells, 0);
    std::vector<std::uint8_t> seen(cells);
    std::vector<int> stack;
    std::vector<int> area(q);
    for (;;) {
        // check: all q colors present, each a single connected region
        std::fill(area.begin(), area.end(), 0);
        for (int i = 0; i < cells; ++i) ++area[grid[i]];
        bool valid = true;
        for (int c = 0; c < q && valid; ++c)
            if (area[c] == 0) valid = false;
        if (valid) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int c = 0; c < q && valid; ++c) {
                int start = 0;
                while (grid[start] != c) ++start;
                if (flood_count(grid, m, n, start, seen, stack) != area[c])
                    valid = false;
            }
        }
        if (valid) {
            std::vector<int> key(area.begin(), area.end() - 1);
            ++result.histogram[key];
        }

        // next coloring, base-q counter
        int pos = cells - 1;
        while (pos >= 0 && grid[pos] == q - 1) grid[pos--] = 0;
        if (pos < 0) break;
        ++grid[pos];
    }
    return result;
}

}  // namespace gerry
