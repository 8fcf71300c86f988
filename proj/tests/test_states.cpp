#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "gerry/states.hpp"

using namespace gerry;

namespace {

// blocks as chunk-index sets, for invariant checks
std::vector<std::vector<int>> blocks_of(const BlockLeaders& leaders) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> id(leaders.size(), -1);
    for (int i = 0; i < (int)leaders.size(); ++i) {
        int l = leaders[i];
        if (id[l] < 0) {
            id[l] = (int)blocks.size();
            blocks.emplace_back();
        }
        blocks[id[l]].push_back(i);
    }
    return blocks;
}

bool partition_non_crossing(const BlockLeaders& leaders) {
    auto blocks = blocks_of(leaders);
    for (size_t a = 0; a < blocks.size(); ++a)
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (a == b) continue;
            for (int a1 : blocks[a])
                for (int a2 : blocks[a])
                    for (int b1 : blocks[b])
                        for (int b2 : blocks[b])
                            if (a1 < b1 && b1 < a2 && a2 < b2) return false;
        }
    return true;
}

ColumnColoring pattern_with_sizes(const std::vector<int>& colors,
                                  const std::vector<int>& sizes) {
    ColumnColoring c;
    for (size_t i = 0; i < colors.size(); ++i)
        for (int j = 0; j < sizes[i]; ++j) c.push_back((std::uint8_t)colors[i]);
    return c;
}

}  // namespace

TEST_CASE("chunks") {
    CHECK(chunks({1, 1, 1, 1}).size() == 1);
    // W W B B B W B W: runs of sizes 2,3,1,1,1
    auto ch = chunks({0, 0, 1, 1, 1, 0, 1, 0});
    REQUIRE(ch.size() == 5);
    CHECK(ch[0].begin == 0);
    CHECK(ch[0].end == 1);
    CHECK(ch[0].color == 0);
    CHECK(ch[1].begin == 2);
    CHECK(ch[1].end == 4);
    CHECK(ch[1].color == 1);
    CHECK(ch[4].begin == 7);
    CHECK(ch[4].color == 0);
    auto alt = chunks({0, 1, 0, 1});
    CHECK(alt.size() == 4);
    for (const auto& c : alt) CHECK(c.begin == c.end);
}

TEST_CASE("arc configurations") {
    // the five-chunk size-8 column admits seven configurations
    CHECK(enumerate_arc_configs(chunks({0, 0, 1, 1, 1, 0, 1, 0})).size() == 7);
    CHECK(enumerate_arc_configs(chunks({1, 1, 1})).size() == 1);
    CHECK(enumerate_arc_configs(chunks({0, 1})).size() == 1);

    SUBCASE("every configuration is monochromatic and non-crossing") {
        auto ch = chunks({0, 1, 0, 1, 0, 1, 0});
        for (const auto& leaders : enumerate_arc_configs(ch)) {
            for (auto& block : blocks_of(leaders))
                for (int i : block)
                    CHECK(ch[i].color == ch[block[0]].color);
            CHECK(partition_non_crossing(leaders));
        }
    }

    SUBCASE("the discrete partition is always present") {
        auto ch = chunks({0, 1, 1, 0, 1});
        BlockLeaders discrete;
        for (int i = 0; i < (int)ch.size(); ++i) discrete.push_back(i);
        auto configs = enumerate_arc_configs(ch);
        CHECK(std::find(configs.begin(), configs.end(), discrete) != configs.end());
    }

    SUBCASE("count depends only on the color pattern, not chunk sizes") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            int k = 1 + (int)(rng() % 6);
            std::vector<int> colors(k);
            colors[0] = rng() % 2;
            for (int i = 1; i < k; ++i) colors[i] = 1 - colors[i - 1];
            std::vector<int> ones(k, 1), sizes(k);
            for (int i = 0; i < k; ++i) sizes[i] = 1 + (int)(rng() % 3);
            auto a = enumerate_arc_configs(chunks(pattern_with_sizes(colors, ones)));
            auto b = enumerate_arc_configs(chunks(pattern_with_sizes(colors, sizes)));
            CHECK(a.size() == b.size());
        }
    }
}

TEST_CASE("uninteresting predicate") {
    // (0,1,0,1) with all-singleton blocks can never be completed
    auto ch = chunks({0, 1, 0, 1});
    CHECK(is_uninteresting(ch, {0, 1, 2, 3}));
    // joining the two white chunks keeps it viable
    CHECK_FALSE(is_uninteresting(ch, {0, 1, 0, 3}));
    // monochromatic column, one block
    CHECK_FALSE(is_uninteresting(chunks({1, 1, 1}), {0}));
}

TEST_CASE("state space construction") {
    CHECK(build_state_space(2).size() == 6);
    CHECK(build_state_space(4).size() == 26);
    CHECK(build_state_space(6).size() == 154);
    CHECK(build_state_space(8).size() == 1026);
    CHECK(build_state_space(3).size() == 12);  // frozen regression value
    CHECK_THROWS_AS(build_state_space(0), std::invalid_argument);

    auto sp = build_state_space(5);
    SUBCASE("index is a bijection") {
        for (int i = 0; i < sp.size(); ++i) CHECK(sp.lookup(sp.states[i]) == i);
        CHECK(sp.lookup({ColumnColoring(5, 0), {0, 1}, false}) == -1);
    }
    SUBCASE("exactly two primed states, both monochromatic one-block") {
        int primed = 0;
        for (const auto& s : sp.states)
            if (s.primed) {
                ++primed;
                CHECK(s.leaders == BlockLeaders{0});
                CHECK(chunks(s.coloring).size() == 1);
            }
        CHECK(primed == 2);
    }
    SUBCASE("no state is uninteresting, all partitions valid") {
        for (const auto& s : sp.states) {
            auto ch = chunks(s.coloring);
            CHECK_FALSE(is_uninteresting(ch, s.leaders));
            CHECK(partition_non_crossing(s.leaders));
            for (auto& block : blocks_of(s.leaders))
                for (int i : block)
                    CHECK(ch[i].color == ch[block[0]].color);
        }
    }
}

TEST_CASE("state dump format") {
    auto sp = build_state_space(2);
    auto dump = dump_states(sp);
    std::istringstream is(dump);
    std::string header;
    std::getline(is, header);
    CHECK(header == "gerrystates v1 r=2 count=6");
    int lines = 0;
    for (std::string line; std::getline(is, line);) ++lines;
    CHECK(lines == 6);
    CHECK(dump == dump_states(build_state_space(2)));  // bit-exact
}
