#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace gerry {

// Thrown when a brute-force request exceeds the desk-scale guard.
class ResourceGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct OracleResult {
    int m = 0;
    int n = 0;
    int q = 2;
    // key: areas of colors 0..q-2 (the last color's area is implied)
    std::map<std::vector<int>, long long> histogram;
};

// Enumerates all q^(m*n) colorings of the m x n grid and counts those where
// every color is present and forms exactly one 4-connected region.
// Guard: q^(m*n) <= 2^30.
OracleResult oracle_histogram(int m, int n, int q);

}  // namespace gerry
