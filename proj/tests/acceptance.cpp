// Acceptance suite: end-to-end checks of every guarantee the library makes,
// one [PASS]/[FAIL] line per criterion. All criteria run even after a
// failure; the exit code is 1 if any failed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flashcodes/bounds.hpp"
#include "flashcodes/buffer.hpp"
#include "flashcodes/constrate.hpp"
#include "flashcodes/core.hpp"
#include "flashcodes/handles.hpp"
#include "flashcodes/indexless.hpp"
#include "flashcodes/staged.hpp"
#include "flashcodes/traceio.hpp"
#include "flashcodes/twobit.hpp"
#include "flashcodes/verifier.hpp"

using namespace flashcodes;

namespace {

using Clock = std::chrono::steady_clock;

struct CriterionFailure {
    std::string what;
};

// Abort the current criterion (not the binary) with a message.
#define NEED(cond, msg)                            \
    do {                                           \
        if (!(cond)) {                             \
            std::ostringstream need_ss;            \
            need_ss << msg;                        \
            throw CriterionFailure{need_ss.str()}; \
        }                                          \
    } while (0)

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

// ---------------------------------------------------------------------------
// 1. The two-bit code's write count, measured exhaustively, matches the
//    closed form (n-1)(q-1) + floor((q-1)/2) on every small odd-q instance.
std::string criterion_twobit_write_counts() {
    struct Case {
        int n, q;
    };
    std::vector<Case> cases{{2, 3}, {2, 5}, {3, 3}, {3, 5}, {4, 3}};
    std::ostringstream detail;
    detail << "t=";
    bool all_equal = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        auto [n, q] = cases[i];
        auto report =
            verifier::min_writes_exhaustive(handles::make_twobit_handle(twobit::TwoBitConfig(n, q)));
        NEED(report.conclusive, "search inconclusive for n=" << n << " q=" << q);
        long long formula = twobit::guaranteed_writes(n, q);
        NEED(report.writes >= formula, "n=" << n << " q=" << q << ": measured "
                                            << report.writes << " writes, formula promises "
                                            << formula);
        all_equal = all_equal && report.writes == formula;
        long long deficiency = static_cast<long long>(n) * (q - 1) - report.writes;
        NEED(deficiency >= bounds::lower_bound_deficiency(n, 2, q).floor(),
             "n=" << n << " q=" << q << ": deficiency " << deficiency
                  << " below the universal floor");
        detail << report.writes << (i + 1 < cases.size() ? "," : "");
    }
    detail << (all_equal ? "; every instance meets the closed form exactly"
                         : "; some instances exceed the closed form");
    return detail.str();
}

// ---------------------------------------------------------------------------
// 2. Block write chains: claiming a block for bit i and writing it until full
//    passes through exactly the expected cell patterns, byte for byte.
std::string criterion_block_chains() {
    const std::vector<std::vector<std::string>> chains{
        {"1,0,0,0", "2,0,0,0", "2,1,0,0", "2,2,0,0", "2,2,1,0", "2,2,2,0", "2,2,2,1",
         "2,2,2,2"},
        {"0,1,0,0", "0,2,0,0", "0,2,1,0", "0,2,2,0", "0,2,2,1", "0,2,2,2", "1,2,2,2",
         "2,2,2,2"},
        {"0,0,1,0", "0,0,2,0", "0,0,2,1", "0,0,2,2", "1,0,2,2", "2,0,2,2", "2,1,2,2",
         "2,2,2,2"},
        {"0,0,0,1", "0,0,0,2", "1,0,0,2", "2,0,0,2", "2,1,0,2", "2,2,0,2", "2,2,1,2",
         "2,2,2,2"},
    };
    const int q = 3;
    for (int bit = 0; bit < 4; ++bit) {
        std::vector<int> block(4, 0);
        indexless::block_write_new(bit, block, q);
        NEED(traceio::join_csv(block) == chains[bit][0],
             "claiming a block for bit " << bit << " gave " << traceio::join_csv(block));
        for (std::size_t step = 1; step < chains[bit].size(); ++step) {
            NEED(indexless::read_index(block, q) == bit,
                 "bit " << bit << " lost its identity at step " << step);
            NEED(parity(CellVector(q, block)) == static_cast<int>(step) % 2,
                 "bit " << bit << " parity wrong before step " << step);
            indexless::block_write(block, q);
            NEED(traceio::join_csv(block) == chains[bit][step],
                 "bit " << bit << " step " << step << " gave " << traceio::join_csv(block)
                        << ", expected " << chains[bit][step]);
        }
        NEED(indexless::block_status(block, q) == indexless::BlockStatus::full,
             "bit " << bit << " chain did not end full");
    }
    return "4 chains x 8 states, all byte-exact";
}

// ---------------------------------------------------------------------------
// 3. Block-indexed code under random adversaries: every run is consistent at
//    each write and the final deficiency never exceeds the stated ceiling.
std::string criterion_indexless_random() {
    std::ostringstream detail;
    for (int q : {3, 5}) {
        const int n = 16, k = 4;
        auto handle = handles::make_indexless_handle(indexless::IndexlessConfig(n, k, q));
        long long full = static_cast<long long>(n) * (q - 1);
        auto summary = verifier::random_adversary(handle, 1000, full + 1, 1);
        NEED(summary.violations == 0, "q=" << q << ": " << summary.violations
                                           << " inconsistent runs, first: "
                                           << summary.first_failure_reason);
        NEED(summary.erased_trials == 1000,
             "q=" << q << ": " << (1000 - summary.erased_trials)
                  << " runs outlived the level budget");
        long long worst = full - summary.min_writes;
        long long ceiling =
            indexless::deficiency_bound(k, q) + static_cast<long long>(k - 1) * (q - 1);
        NEED(worst <= ceiling, "q=" << q << ": worst deficiency " << worst
                                    << " exceeds ceiling " << ceiling);
        // The worst sampled run under-estimates the true worst case, so it
        // must already reach the universal deficiency floor.
        NEED(worst >= bounds::lower_bound_deficiency(n, k, q).floor(),
             "q=" << q << ": sampled worst deficiency " << worst
                  << " below the universal floor");
        detail << (q == 3 ? "" : "; ") << "q=" << q << " worst deficiency " << worst << "/"
               << ceiling;
    }
    return detail.str();
}

// ---------------------------------------------------------------------------
// 4. Staged code, both index layouts, q in {3,4}, at the smallest legal size:
//    500 random runs each stay consistent and end within the deficiency bound.
std::string criterion_staged_random() {
    std::ostringstream detail;
    bool first = true;
    for (int q : {3, 4}) {
        for (auto variant : {staged::IndexVariant::per_stage, staged::IndexVariant::stacked_binary}) {
            const int k = 4;
            int n = staged::StagedConfig::minimum_cells(k, q, variant);
            staged::StagedConfig cfg(n, k, q, variant);
            auto handle = handles::make_staged_handle(cfg);
            long long full = static_cast<long long>(n) * (q - 1);
            auto summary = verifier::random_adversary(handle, 500, full + 1, 1);
            NEED(summary.violations == 0,
                 handle.name << " q=" << q << ": " << summary.violations
                             << " inconsistent runs, first: " << summary.first_failure_reason);
            NEED(summary.erased_trials == 500, handle.name << " q=" << q
                                                           << ": runs outlived the level budget");
            long long worst = full - summary.min_writes;
            long long ceiling = variant == staged::IndexVariant::per_stage
                                    ? staged::bound_per_stage(k, q)
                                    : staged::bound_stacked(k, q);
            NEED(worst <= ceiling, handle.name << " q=" << q << ": worst deficiency " << worst
                                               << " exceeds ceiling " << ceiling);
            // Sampled worst case under-estimates the true worst case, so it
            // must already reach the universal deficiency floor.
            NEED(worst >= bounds::lower_bound_deficiency(n, k, q).floor(),
                 handle.name << " q=" << q << ": sampled worst deficiency " << worst
                             << " below the universal floor");
            detail << (first ? "" : "; ") << handle.name << " q=" << q << " n=" << n << " "
                   << worst << "/" << ceiling;
            first = false;
        }
    }
    return detail.str();
}

// ---------------------------------------------------------------------------
// 5. The window codec reproduces the worked fourteen-write example line for
//    line. The often-quoted variant that repeats the thirteenth cell pattern
//    as the fourteenth breaks the layer-count rule; the corrected final row
//    is the one the codec produces.
std::string criterion_window_golden_trace() {
    buffer::BufferConfig cfg(11, 3, 4);
    const std::vector<int> tape{1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1, 0};
    const std::vector<std::string> golden{
        "w=0 b=- cells=0,0,0,0,0,0,0,0,0,0,0 buffer=0,0,0,0",
        "w=1 b=1 cells=0,0,0,0,1,0,0,0,0,0,0 buffer=0,0,0,1",
        "w=2 b=1 cells=0,0,0,0,1,1,0,0,0,0,0 buffer=0,0,1,1",
        "w=3 b=0 cells=1,0,0,0,1,1,0,0,0,0,0 buffer=0,1,1,0",
        "w=4 b=0 cells=1,1,0,0,1,1,0,0,0,0,0 buffer=1,1,0,0",
        "w=5 b=1 cells=1,1,0,0,1,1,0,0,1,0,0 buffer=1,0,0,1",
        "w=6 b=0 cells=1,1,1,0,1,1,0,0,1,0,0 buffer=0,0,1,0",
        "w=7 b=0 cells=1,1,1,1,1,1,0,0,1,0,0 buffer=0,1,0,0",
        "w=8 b=1 cells=1,1,1,1,2,1,1,1,1,0,0 buffer=1,0,0,1",
        "w=9 b=1 cells=1,1,1,1,2,2,1,1,1,0,0 buffer=0,0,1,1",
        "w=10 b=1 cells=1,1,1,1,2,2,2,1,1,1,0 buffer=0,1,1,1",
        "w=11 b=0 cells=2,1,1,1,2,2,2,1,1,1,1 buffer=1,1,1,0",
        "w=12 b=1 cells=2,1,1,1,2,2,2,1,2,1,1 buffer=1,1,0,1",
        "w=13 b=1 cells=2,1,1,1,2,2,2,1,2,2,1 buffer=1,0,1,1",
        "w=14 b=0 cells=2,2,1,1,2,2,2,1,2,2,1 buffer=0,1,1,0",
    };

    CellVector st = buffer::initial_state(cfg);
    std::string line = buffer::trace_line(0, std::nullopt, st, buffer::decode(cfg, st));
    NEED(line == golden[0], "row 0 mismatch: " << line);
    for (std::size_t w = 1; w <= tape.size(); ++w) {
        auto out = buffer::encode(cfg, st, tape[w - 1]);
        NEED(!out.erased(), "unexpected erase at write " << w);
        st = out.state();
        line = buffer::trace_line(static_cast<long long>(w), tape[w - 1], st,
                                  buffer::decode(cfg, st));
        NEED(line == golden[w], "row " << w << " mismatch:\n  got      " << line
                                       << "\n  expected " << golden[w]);
    }
    NEED(buffer::encode(cfg, st, 0).erased() && buffer::encode(cfg, st, 1).erased(),
         "write 15 should erase");

    // Layer-count rule after 14 = 1*(11-4) + 7 writes: seven cells at level 2.
    NEED(count_at_level(st, 2) == 7, "corrected final row must hold 7 top-level cells");
    CellVector repeated(3, {2, 1, 1, 1, 2, 2, 2, 1, 2, 2, 1});
    NEED(count_at_level(repeated, 2) == 6,
         "the repeated-row variant would need 7 top-level cells but has "
             << count_at_level(repeated, 2));
    return "15 rows byte-exact, erase at write 15, repeated-row variant rejected";
}

// ---------------------------------------------------------------------------
// 6. Exhaustive window correctness on four small instances: every bit
//    sequence decodes to the true window at every step, no erase happens
//    before the guaranteed count, and the next write after it always erases.
std::string criterion_window_exhaustive() {
    struct Case {
        int n, q, r;
    };
    std::vector<Case> cases{{4, 2, 2}, {5, 3, 2}, {6, 3, 2}, {6, 2, 3}};
    std::ostringstream detail;
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        auto [n, q, r] = cases[ci];
        buffer::BufferConfig cfg(n, q, r);
        long long limit = buffer::guaranteed_writes(cfg);
        long long leaves = 0;
        std::vector<int> history;
        std::function<void(const CellVector&)> visit = [&](const CellVector& st) {
            if (static_cast<long long>(history.size()) == limit) {
                NEED(buffer::encode(cfg, st, 0).erased() && buffer::encode(cfg, st, 1).erased(),
                     "n=" << n << " q=" << q << " r=" << r
                          << ": a sequence survived past the guaranteed count");
                ++leaves;
                return;
            }
            for (int bit = 0; bit < 2; ++bit) {
                auto out = buffer::encode(cfg, st, bit);
                NEED(!out.erased(), "n=" << n << " q=" << q << " r=" << r
                                         << ": erase after only " << history.size()
                                         << " writes");
                history.push_back(bit);
                InfoVector want(static_cast<std::size_t>(r), 0);
                for (int i = 0; i < r && i < static_cast<int>(history.size()); ++i)
                    want[static_cast<std::size_t>(i)] = history[history.size() - 1 - i];
                NEED(buffer::decode(cfg, out.state()) == want,
                     "n=" << n << " q=" << q << " r=" << r << ": window wrong after "
                          << history.size() << " writes");
                visit(out.state());
                history.pop_back();
            }
        };
        visit(buffer::initial_state(cfg));
        NEED(leaves == (1LL << limit), "n=" << n << " q=" << q << " r=" << r << ": expected "
                                            << (1LL << limit) << " full sequences, saw "
                                            << leaves);
        detail << (ci ? "; " : "") << n << "," << q << "," << r << ": " << leaves
               << " sequences";
    }
    return detail.str();
}

// ---------------------------------------------------------------------------
// 7. Layer-count rule: after s = x(n-r)+y writes (1 <= y <= n-r) the maximum
//    level is x+1 and exactly y cells sit there — on every exhaustive path of
//    the small instances, every golden-trace step, and random long runs.
std::string criterion_window_layer_rule() {
    auto check = [](const buffer::BufferConfig& cfg, long long s, const CellVector& st) {
        long long span = cfg.n - cfg.r;
        long long x = (s - 1) / span;
        long long y = s - x * span;
        int top = *std::max_element(st.levels.begin(), st.levels.end());
        NEED(top == x + 1, "after " << s << " writes the top level is " << top
                                    << ", expected " << (x + 1));
        NEED(count_at_level(st, static_cast<int>(x) + 1) == y,
             "after " << s << " writes " << count_at_level(st, static_cast<int>(x) + 1)
                      << " cells sit at the top level, expected " << y);
    };

    long long states_checked = 0;
    struct Case {
        int n, q, r;
    };
    for (auto [n, q, r] : std::vector<Case>{{4, 2, 2}, {5, 3, 2}, {6, 3, 2}, {6, 2, 3}}) {
        buffer::BufferConfig cfg(n, q, r);
        long long limit = buffer::guaranteed_writes(cfg);
        std::function<void(const CellVector&, long long)> visit =
            [&](const CellVector& st, long long s) {
                if (s == limit) return;
                for (int bit = 0; bit < 2; ++bit) {
                    CellVector y = buffer::encode(cfg, st, bit).state();
                    check(cfg, s + 1, y);
                    ++states_checked;
                    visit(y, s + 1);
                }
            };
        visit(buffer::initial_state(cfg), 0);
    }

    buffer::BufferConfig big(11, 3, 4);
    const std::vector<int> tape{1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 1, 0};
    CellVector st = buffer::initial_state(big);
    for (std::size_t w = 0; w < tape.size(); ++w) {
        st = buffer::encode(big, st, tape[w]).state();
        check(big, static_cast<long long>(w) + 1, st);
        ++states_checked;
    }

    for (int trial = 1; trial <= 200; ++trial) {
        std::mt19937_64 gen(0x5eedULL + static_cast<std::uint64_t>(trial));
        CellVector state = buffer::initial_state(big);
        long long writes = buffer::guaranteed_writes(big);
        for (long long s = 1; s <= writes; ++s) {
            auto out = buffer::encode(big, state, static_cast<int>(gen() & 1));
            NEED(!out.erased(), "random run erased after " << (s - 1) << " writes");
            state = out.state();
            check(big, s, state);
            ++states_checked;
        }
        NEED(buffer::encode(big, state, 0).erased() && buffer::encode(big, state, 1).erased(),
             "random run outlived the guaranteed count");
    }
    std::ostringstream detail;
    detail << states_checked << " states checked";
    return detail.str();
}

// ---------------------------------------------------------------------------
// 8. The cycle-based single-cell bound never loses to the verbatim one, for
//    every alphabet/window/level combination in range.
std::string criterion_single_cell_dominance() {
    long long pairs = 0;
    for (int ell : {2, 3}) {
        for (int r : {2, 3, 4}) {
            long long full = 1;
            for (int i = 0; i < r; ++i) full *= ell;
            for (long long q = full; q <= 1000; ++q) {
                NEED(buffer::bound_single_cell_new(q, ell, r) <=
                         buffer::bound_single_cell_old(q, ell, r),
                     "cycle bound loses at q=" << q << " ell=" << ell << " r=" << r);
                ++pairs;
            }
        }
    }
    std::ostringstream detail;
    detail << pairs << " parameter triples";
    return detail.str();
}

// ---------------------------------------------------------------------------
// 9. cycle_count equals a brute-force count of rotation orbits.
std::string criterion_cycle_counts() {
    NEED(buffer::cycle_count(2, 2) == 3, "cycle_count(2,2) != 3");
    NEED(buffer::cycle_count(2, 3) == 4, "cycle_count(2,3) != 4");
    long long checked = 0;
    for (int ell = 2; ell <= 3; ++ell) {
        for (int r = 1; r <= 6; ++r) {
            long long total = 1;
            for (int i = 0; i < r; ++i) total *= ell;
            std::vector<bool> seen(static_cast<std::size_t>(total), false);
            long long orbits = 0;
            for (long long s = 0; s < total; ++s) {
                if (seen[static_cast<std::size_t>(s)]) continue;
                ++orbits;
                long long cur = s;
                do {
                    seen[static_cast<std::size_t>(cur)] = true;
                    cur = cur / ell + (cur % ell) * (total / ell);
                } while (cur != s);
            }
            NEED(buffer::cycle_count(ell, r) == orbits,
                 "ell=" << ell << " r=" << r << ": cycle_count says "
                        << buffer::cycle_count(ell, r) << ", brute force says " << orbits);
            ++checked;
        }
    }
    std::ostringstream detail;
    detail << checked << " (ell,r) pairs against brute force";
    return detail.str();
}

// ---------------------------------------------------------------------------
// 10. Fixed-rate code: every adversary gets exactly m(q-1) writes — no state
//     reachable earlier can erase, and every state at the limit must.
std::string criterion_constrate_exact() {
    struct Case {
        int n, k;
    };
    std::ostringstream detail;
    bool first = true;
    for (auto [n, k] : std::vector<Case>{{8, 2}, {20, 4}}) {
        constrate::ConstRateConfig cfg(n, k, 3);
        auto handle = handles::make_constrate_handle(cfg);
        long long t = constrate::guaranteed_writes(cfg);

        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> frontier{handle.initial()};
        seen.insert(frontier.front());
        for (long long depth = 0; depth < t; ++depth) {
            std::vector<std::vector<int>> next_frontier;
            for (const auto& state : frontier) {
                for (int input = 0; input < k; ++input) {
                    auto next = handle.write(state, input);
                    NEED(next.has_value(), "n=" << n << " k=" << k << ": erase after only "
                                                << depth << " writes");
                    if (seen.insert(*next).second) next_frontier.push_back(std::move(*next));
                }
            }
            frontier = std::move(next_frontier);
        }
        for (const auto& state : frontier)
            for (int input = 0; input < k; ++input)
                NEED(!handle.write(state, input).has_value(),
                     "n=" << n << " k=" << k << ": a write succeeded past the limit");

        auto report = verifier::min_writes_exhaustive(handle);
        NEED(report.conclusive && report.writes == t,
             "n=" << n << " k=" << k << ": breadth-first search found " << report.writes
                  << " writes, formula says " << t);
        long long deficiency = static_cast<long long>(n) * 2 - t;
        NEED(deficiency >= bounds::lower_bound_deficiency(n, k, 3).floor(),
             "n=" << n << " k=" << k << ": deficiency below the universal floor");
        detail << (first ? "" : "; ") << "n=" << n << " k=" << k << ": exactly " << t
               << " writes over " << seen.size() << " states";
        first = false;
    }
    return detail.str();
}

// ---------------------------------------------------------------------------
// Informational: how the staged code's deficiency scales against k*log2(k).
void staged_scaling_report() {
    std::cout << "[INFO] staged per-stage deficiency against k*log2(k), q=3:\n";
    for (int k : {4, 8, 16}) {
        int n = staged::StagedConfig::minimum_cells(k, 3, staged::IndexVariant::per_stage);
        double denom = k * std::log2(static_cast<double>(k));
        long long per_bound = staged::bound_per_stage(k, 3);
        long long stacked_bound = staged::bound_stacked(k, 3);

        staged::StagedConfig cfg(n, k, 3, staged::IndexVariant::per_stage);
        auto handle = handles::make_staged_handle(cfg);
        long long full = static_cast<long long>(n) * 2;
        long long trials = k == 16 ? 25 : 200;
        auto summary = verifier::random_adversary(handle, trials, full + 1, 1);
        long long measured = full - summary.min_writes;

        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "[INFO]   k=" << k << " n=" << n << ": measured max deficiency " << measured
             << " (ratio " << measured / denom << "), stage-index bound " << per_bound << " (ratio "
             << per_bound / denom << "), stacked-index bound " << stacked_bound << " (ratio "
             << stacked_bound / denom << ")";
        if (summary.violations > 0) line << " [WARNING: " << summary.violations
                                         << " inconsistent runs]";
        std::cout << line.str() << '\n';
    }
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        long long limit_ms;  // 0 = no budget
        std::function<std::string()> body;
    };
    std::vector<Criterion> criteria{
        {1, "exhaustive two-bit write counts meet the closed form", 10'000,
         criterion_twobit_write_counts},
        {2, "block write chains are byte-exact", 0, criterion_block_chains},
        {3, "block-indexed code stays within its deficiency ceiling", 30'000,
         criterion_indexless_random},
        {4, "staged code stays consistent and within its bounds", 60'000,
         criterion_staged_random},
        {5, "window codec reproduces the worked fourteen-write trace", 0,
         criterion_window_golden_trace},
        {6, "window codec is exact on every sequence of four small instances", 60'000,
         criterion_window_exhaustive},
        {7, "window layer-count rule holds in every simulation", 0,
         criterion_window_layer_rule},
        {8, "cycle-based single-cell bound dominates the verbatim bound", 5'000,
         criterion_single_cell_dominance},
        {9, "closed-form cycle counts match brute-force orbit counts", 0,
         criterion_cycle_counts},
        {10, "fixed-rate code gives every adversary exactly m(q-1) writes", 60'000,
         criterion_constrate_exact},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = Clock::now();
        try {
            std::string detail = criterion.body();
            long long ms = elapsed_ms(start);
            if (criterion.limit_ms > 0 && ms > criterion.limit_ms) {
                ++failures;
                std::cout << "[FAIL] criterion " << criterion.number << ": " << criterion.title
                          << " (" << ms << " ms exceeds the " << criterion.limit_ms
                          << " ms budget)\n";
            } else {
                std::cout << "[PASS] criterion " << criterion.number << ": " << criterion.title
                          << " (" << detail << "; " << ms << " ms)\n";
            }
        } catch (const CriterionFailure& f) {
            ++failures;
            std::cout << "[FAIL] criterion " << criterion.number << ": " << criterion.title
                      << " (" << f.what << "; " << elapsed_ms(start) << " ms)\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << criterion.number << ": " << criterion.title
                      << " (unexpected exception: " << e.what() << "; " << elapsed_ms(start)
                      << " ms)\n";
        }
    }

    staged_scaling_report();

    std::cout << (10 - failures) << " of 10 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
