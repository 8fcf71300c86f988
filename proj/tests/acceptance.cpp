// End-to-end acceptance suite: one line per criterion.
#include <algorithm>
#include <cstdio>
#include <thread>

#include "gerry/verify.hpp"

int main() {
    using namespace gerry;
    int threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

    struct Criterion {
        int number;
        CheckResult result;
    };
    std::vector<Criterion> criteria;
    criteria.push_back({1, check_sequence_terms(5, threads)});
    criteria.push_back({2, check_state_table(5)});
    criteria.push_back({3, check_m2_series()});
    criteria.push_back({4, check_knuth_crosscheck(20)});
    criteria.push_back({5, check_oracle_equivalence(20)});
    criteria.push_back({6, check_strategy_agreement(36, threads)});
    criteria.push_back({7, check_height_bound()});
    criteria.push_back({8, check_property_suite(1000)});

    int failures = 0;
    for (const auto& c : criteria) {
        std::printf("%s criterion %d: %s (%s)\n",
                    c.result.pass ? "PASS" : "FAIL", c.number,
                    c.result.name.c_str(), c.result.detail.c_str());
        if (!c.result.pass) ++failures;
    }
    if (failures)
        std::printf("%d criterion(s) failed\n", failures);
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
