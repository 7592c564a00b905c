#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <set>
#include <vector>

#include "flashcodes/core.hpp"
#include "flashcodes/indexless.hpp"

using namespace flashcodes;
namespace il = flashcodes::indexless;

TEST_CASE("config derives block layout and pads odd k with even q") {
    il::IndexlessConfig cfg(16, 4, 3);
    CHECK(cfg.internal_k == 4);
    CHECK(cfg.block_count == 4);

    il::IndexlessConfig padded(16, 3, 4);
    CHECK(padded.internal_k == 4);
    CHECK(padded.block_count == 4);

    il::IndexlessConfig unpadded(9, 3, 3);
    CHECK(unpadded.internal_k == 3);
    CHECK(unpadded.block_count == 3);

    CHECK_THROWS_AS(il::IndexlessConfig(15, 4, 3), ContractError);
    CHECK_THROWS_AS(il::IndexlessConfig(16, 0, 3), ContractError);
    CHECK_THROWS_AS(il::IndexlessConfig(16, 4, 1), ContractError);
}

TEST_CASE("block status distinguishes empty, active and full") {
    std::vector<int> empty{0, 0, 0, 0};
    std::vector<int> active{0, 2, 1, 0};
    std::vector<int> full{2, 2, 2, 2};
    CHECK(il::block_status(empty, 3) == il::BlockStatus::empty);
    CHECK(il::block_status(active, 3) == il::BlockStatus::active);
    CHECK(il::block_status(full, 3) == il::BlockStatus::full);
}

TEST_CASE("read_index recovers the bit from the zero run") {
    std::vector<int> a{0, 2, 1, 0};
    std::vector<int> b{2, 2, 2, 1};
    std::vector<int> c{1, 0, 0, 0};
    CHECK(il::read_index(a, 3) == 1);
    CHECK(il::read_index(b, 3) == 0);
    CHECK(il::read_index(c, 3) == 0);

    std::vector<int> full{2, 2, 2, 2};
    std::vector<int> empty{0, 0, 0, 0};
    CHECK_THROWS_AS(il::read_index(full, 3), ContractError);
    CHECK_THROWS_AS(il::read_index(empty, 3), ContractError);
}

TEST_CASE("block_write advances the cell left of the zero run") {
    std::vector<int> a{0, 2, 0, 0};
    il::block_write(a, 3);
    CHECK(a == std::vector<int>{0, 2, 1, 0});

    std::vector<int> b{2, 2, 1, 0};
    il::block_write(b, 3);
    CHECK(b == std::vector<int>{2, 2, 2, 0});

    std::vector<int> c{2, 2, 2, 1};
    il::block_write(c, 3);
    CHECK(c == std::vector<int>{2, 2, 2, 2});

    std::vector<int> full{2, 2, 2, 2};
    CHECK_THROWS_AS(il::block_write(full, 3), ContractError);
}

TEST_CASE("block_write_new claims an empty block for one bit") {
    std::vector<int> a{0, 0, 0, 0};
    il::block_write_new(0, a, 3);
    CHECK(a == std::vector<int>{1, 0, 0, 0});

    std::vector<int> b{0, 0, 0, 0};
    il::block_write_new(3, b, 3);
    CHECK(b == std::vector<int>{0, 0, 0, 1});

    std::vector<int> c{0, 0, 0, 0};
    il::block_write_new(1, c, 3);
    CHECK(c == std::vector<int>{0, 1, 0, 0});

    std::vector<int> used{0, 1, 0, 0};
    CHECK_THROWS_AS(il::block_write_new(0, used, 3), ContractError);
    std::vector<int> fresh{0, 0, 0, 0};
    CHECK_THROWS_AS(il::block_write_new(4, fresh, 3), ContractError);
}

namespace {

// One block dedicated to bit i, written to full: the index must read back as i
// after every write, the weight must grow by one per write, and the exact cell
// states must follow the block's canonical fill order.
void check_chain(int i, const std::vector<std::vector<int>>& expected) {
    const int q = 3;
    std::vector<int> block{0, 0, 0, 0};
    il::block_write_new(i, block, q);
    REQUIRE(block == expected.front());
    for (std::size_t step = 1; step < expected.size(); ++step) {
        CHECK(il::read_index(block, q) == i);
        long long before = 0;
        for (int v : block) before += v;
        il::block_write(block, q);
        long long after = 0;
        for (int v : block) after += v;
        CHECK(after == before + 1);
        REQUIRE(block == expected[step]);
    }
    CHECK(il::block_status(block, q) == il::BlockStatus::full);
}

}  // namespace

TEST_CASE("dedicated blocks walk their full canonical write chains") {
    check_chain(0, {{1, 0, 0, 0}, {2, 0, 0, 0}, {2, 1, 0, 0}, {2, 2, 0, 0},
                    {2, 2, 1, 0}, {2, 2, 2, 0}, {2, 2, 2, 1}, {2, 2, 2, 2}});
    check_chain(1, {{0, 1, 0, 0}, {0, 2, 0, 0}, {0, 2, 1, 0}, {0, 2, 2, 0},
                    {0, 2, 2, 1}, {0, 2, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2}});
    check_chain(2, {{0, 0, 1, 0}, {0, 0, 2, 0}, {0, 0, 2, 1}, {0, 0, 2, 2},
                    {1, 0, 2, 2}, {2, 0, 2, 2}, {2, 1, 2, 2}, {2, 2, 2, 2}});
    check_chain(3, {{0, 0, 0, 1}, {0, 0, 0, 2}, {1, 0, 0, 2}, {2, 0, 0, 2},
                    {2, 1, 0, 2}, {2, 2, 0, 2}, {2, 2, 1, 2}, {2, 2, 2, 2}});
}

TEST_CASE("decoding reads active blocks only") {
    il::IndexlessConfig cfg(16, 4, 3);
    CHECK(il::decode(cfg, CellVector::zeros(3, 16)) == InfoVector{0, 0, 0, 0});

    CellVector one_active = CellVector::zeros(3, 16);
    one_active.levels[1] = 1;  // block 0 = (0,1,0,0): index 1, parity 1
    CHECK(il::decode(cfg, one_active) == InfoVector{0, 1, 0, 0});

    CellVector all_full(3, std::vector<int>(16, 2));
    CHECK(il::decode(cfg, all_full) == InfoVector{0, 0, 0, 0});
}

TEST_CASE("encoding prefers the bit's active block, then an empty one") {
    il::IndexlessConfig cfg(16, 4, 3);
    CellVector fresh = CellVector::zeros(3, 16);

    auto first = il::encode(cfg, fresh, 2);
    REQUIRE_FALSE(first.erased());
    CellVector expect = fresh;
    expect.levels[2] = 1;
    CHECK(first.state() == expect);

    auto second = il::encode(cfg, first.state(), 2);
    REQUIRE_FALSE(second.erased());
    expect.levels[2] = 2;
    CHECK(second.state() == expect);

    CellVector all_full(3, std::vector<int>(16, 2));
    CHECK(il::encode(cfg, all_full, 0).erased());

    CHECK_THROWS_AS(il::encode(cfg, fresh, 4), ContractError);
    CHECK_THROWS_AS(il::encode(cfg, fresh, -1), ContractError);
}

TEST_CASE("deficiency ceiling follows its closed form") {
    CHECK(il::deficiency_bound(4, 3) == 27);
    CHECK(il::deficiency_bound(1, 7) == 0);
    CHECK(il::deficiency_bound(2, 2) == 2);
    CHECK_THROWS_AS(il::deficiency_bound(0, 3), ContractError);
    CHECK_THROWS_AS(il::deficiency_bound(4, 1), ContractError);
}

TEST_CASE("every reachable state keeps one active block per bit at most") {
    il::IndexlessConfig cfg(16, 4, 3);
    CellVector start = CellVector::zeros(3, 16);

    std::set<std::vector<int>> seen;
    std::deque<CellVector> frontier;
    seen.insert(start.levels);
    frontier.push_back(start);
    long long erases = 0;

    while (!frontier.empty()) {
        CellVector x = frontier.front();
        frontier.pop_front();

        std::vector<int> active_for_bit(cfg.k, 0);
        for (int b = 0; b < cfg.block_count; ++b) {
            std::span<const int> block(x.levels.data() + b * cfg.internal_k,
                                       static_cast<std::size_t>(cfg.internal_k));
            if (il::block_status(block, cfg.q) == il::BlockStatus::active) {
                ++active_for_bit[il::read_index(block, cfg.q)];
            }
        }
        for (int count : active_for_bit) REQUIRE(count <= 1);

        InfoVector before = il::decode(cfg, x);
        for (int bit = 0; bit < cfg.k; ++bit) {
            auto out = il::encode(cfg, x, bit);
            if (out.erased()) {
                ++erases;
                continue;
            }
            const CellVector& y = out.state();
            REQUIRE(is_monotone_step(x, y));
            REQUIRE(weight(y) == weight(x) + 1);
            InfoVector expected = before;
            expected[bit] ^= 1;
            REQUIRE(il::decode(cfg, y) == expected);
            if (seen.insert(y.levels).second) frontier.push_back(y);
        }
    }
    // Size of the whole reachable graph, not the states a shortest-erase
    // search visits (that count lives with the search tests).
    CHECK(seen.size() == 104949);
    CHECK(erases > 0);
}

TEST_CASE("padded configs expose only the public bits") {
    il::IndexlessConfig cfg(16, 3, 4);  // internal blocks of 4 cells
    CellVector fresh = CellVector::zeros(4, 16);
    CHECK(il::decode(cfg, fresh) == InfoVector{0, 0, 0});
    CHECK_THROWS_AS(il::encode(cfg, fresh, 3), ContractError);

    auto out = il::encode(cfg, fresh, 2);
    REQUIRE_FALSE(out.erased());
    CHECK(il::decode(cfg, out.state()) == InfoVector{0, 0, 1});
}

TEST_CASE("index-less states round-trip through text") {
    il::IndexlessConfig cfg(16, 4, 3);
    CellVector x = CellVector::zeros(3, 16);
    x.levels[0] = 2;
    x.levels[5] = 1;
    std::string text = il::serialize(cfg, x);
    auto [cfg2, x2] = il::parse(text);
    CHECK(cfg2.n == 16);
    CHECK(cfg2.k == 4);
    CHECK(cfg2.q == 3);
    CHECK(x2 == x);

    CHECK_THROWS_AS(il::parse("scheme=twobit n=16 k=4 q=3\nq=3 cells=0\n"), ContractError);
}
