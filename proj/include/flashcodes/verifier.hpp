#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace flashcodes::verifier {

enum class SchemeKind { flash, buffer };

// Type-erased view of one configured scheme over flat cell-level states, so
// the searches below work on every code the same way. Multi-region schemes
// concatenate their regions. `write` returns nullopt when the scheme must
// erase. For flash kinds `decode` yields the stored bits and an input is the
// index of the bit to flip; for buffer kinds `decode` yields the window
// newest-first and an input is the bit to append.
struct SchemeHandle {
    std::string name;
    SchemeKind kind = SchemeKind::flash;
    int inputs = 0;
    std::function<std::vector<int>()> initial;
    std::function<std::optional<std::vector<int>>(const std::vector<int>&, int)> write;
    std::function<std::vector<int>(const std::vector<int>&)> decode;
    std::function<std::string(const std::vector<int>&)> serialize;
    std::function<std::vector<int>(const std::string&)> parse;
};

struct VerificationReport {
    bool conclusive = false;
    // Writes the scheme guarantees: the shortest input sequence whose last
    // write erases has witness.size() = writes + 1. -1 when inconclusive, or
    // (with conclusive=true) when no erase is reachable at all.
    long long writes = -1;
    std::vector<int> witness;
    long long states_explored = 0;
    long long wall_ms = 0;
};

// Breadth-first search of the reachable state graph. Expansion is FIFO with
// inputs tried in ascending order, so the witness returned is the
// lexicographically smallest among the shortest erasing sequences. Stops
// inconclusive once `budget` distinct states have been discovered.
VerificationReport min_writes_exhaustive(const SchemeHandle& handle,
                                         long long budget = 10'000'000);

// Depth-limited search for the same quantity, as an independent cross-check
// of the breadth-first result. No deduplication, so keep instances tiny.
std::optional<long long> min_writes_iterative_deepening(const SchemeHandle& handle,
                                                        long long max_depth);

struct ConsistencyResult {
    bool pass = true;
    long long steps_completed = 0;
    bool erased = false;
    long long failing_step = -1;  // 1-based write index, -1 when pass
    std::string reason;
};

// Replays an input sequence checking, at every write: cells never decrease,
// total weight grows, and the decoded payload matches what the inputs imply
// (exact bit flip for flash, input-history window for buffer). An erase ends
// the run without failing it.
ConsistencyResult consistency_run(const SchemeHandle& handle,
                                  const std::vector<int>& inputs);

struct RandomSummary {
    long long trials = 0;
    long long horizon = 0;
    long long violations = 0;
    long long erased_trials = 0;
    long long min_writes = 0;
    long long max_writes = 0;
    long long total_writes = 0;
    double mean_writes = 0.0;
    long long first_failure_trial = -1;  // 1-based, -1 when none
    std::string first_failure_reason;
};

// Runs `trials` independent random input sequences of length `horizon`
// through consistency_run. Trial i draws from a generator seeded with
// seed ^ (0x9e3779b97f4a7c15 * i) for i = 1..trials, so any trial can be
// replayed in isolation.
RandomSummary random_adversary(const SchemeHandle& handle, long long trials,
                               long long horizon, std::uint64_t seed);

// The window an ideal recorder would hold after the given inputs: last r
// values newest-first, zero-padded when fewer than r inputs happened.
std::vector<int> window_oracle(const std::vector<int>& inputs, int r);

struct ReplayResult {
    std::vector<int> state;
    bool erased = false;
    long long writes = 0;  // successful writes before the erase, if any
};

ReplayResult replay(const SchemeHandle& handle, const std::vector<int>& inputs);

// key=value lines, one per field, for report-style CLI output.
std::string report_text(const VerificationReport& report);
std::string summary_text(const RandomSummary& summary);

}  // namespace flashcodes::verifier
