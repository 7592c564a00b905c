#include "flashcodes/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <unordered_map>

#include "flashcodes/core.hpp"
#include "flashcodes/traceio.hpp"

namespace flashcodes::verifier {

namespace {

std::string pack(const std::vector<int>& state) {
    std::string key(state.size() * 2, '\0');
    for (std::size_t i = 0; i < state.size(); ++i) {
        key[2 * i] = static_cast<char>(state[i] & 0xff);
        key[2 * i + 1] = static_cast<char>((state[i] >> 8) & 0xff);
    }
    return key;
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
    auto d = std::chrono::steady_clock::now() - start;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
}

}  // namespace

VerificationReport min_writes_exhaustive(const SchemeHandle& handle, long long budget) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;

    std::vector<std::vector<int>> states;
    std::vector<std::pair<int, int>> parent;  // (state index, input), (-1,-1) at root
    std::unordered_map<std::string, int> seen;

    std::vector<int> root = handle.initial();
    seen.emplace(pack(root), 0);
    states.push_back(std::move(root));
    parent.emplace_back(-1, -1);

    for (std::size_t head = 0; head < states.size(); ++head) {
        for (int input = 0; input < handle.inputs; ++input) {
            auto next = handle.write(states[head], input);
            if (!next) {
                // FIFO order plus ascending inputs makes this the shortest,
                // lexicographically smallest erasing sequence.
                std::vector<int> witness{input};
                for (int at = static_cast<int>(head); parent[at].first >= 0;
                     at = parent[at].first)
                    witness.push_back(parent[at].second);
                std::reverse(witness.begin(), witness.end());
                report.conclusive = true;
                report.writes = static_cast<long long>(witness.size()) - 1;
                report.witness = std::move(witness);
                report.states_explored = static_cast<long long>(states.size());
                report.wall_ms = elapsed_ms(start);
                return report;
            }
            auto [it, inserted] = seen.emplace(pack(*next), static_cast<int>(states.size()));
            if (!inserted) continue;
            states.push_back(std::move(*next));
            parent.emplace_back(static_cast<int>(head), input);
            if (static_cast<long long>(states.size()) > budget) {
                report.states_explored = static_cast<long long>(states.size());
                report.wall_ms = elapsed_ms(start);
                return report;  // inconclusive
            }
        }
    }

    // Whole reachable graph explored and nothing erases.
    report.conclusive = true;
    report.writes = -1;
    report.states_explored = static_cast<long long>(states.size());
    report.wall_ms = elapsed_ms(start);
    return report;
}

namespace {

bool erase_at_exact_depth(const SchemeHandle& handle, const std::vector<int>& state,
                          long long remaining) {
    if (remaining == 0) {
        for (int input = 0; input < handle.inputs; ++input)
            if (!handle.write(state, input)) return true;
        return false;
    }
    for (int input = 0; input < handle.inputs; ++input) {
        auto next = handle.write(state, input);
        if (next && erase_at_exact_depth(handle, *next, remaining - 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<long long> min_writes_iterative_deepening(const SchemeHandle& handle,
                                                        long long max_depth) {
    std::vector<int> root = handle.initial();
    for (long long depth = 0; depth <= max_depth; ++depth)
        if (erase_at_exact_depth(handle, root, depth)) return depth;
    return std::nullopt;
}

ConsistencyResult consistency_run(const SchemeHandle& handle,
                                  const std::vector<int>& inputs) {
    ConsistencyResult result;
    auto fail = [&](long long step, std::string reason) {
        result.pass = false;
        result.failing_step = step;
        result.reason = std::move(reason);
        return result;
    };

    std::vector<int> state;
    try {
        state = handle.initial();
        std::vector<int> zero_payload = handle.decode(state);
        if (std::any_of(zero_payload.begin(), zero_payload.end(),
                        [](int v) { return v != 0; }))
            return fail(0, "initial state does not decode to zeros");

        std::vector<int> history;
        for (std::size_t step = 0; step < inputs.size(); ++step) {
            int input = inputs[step];
            if (input < 0 || input >= handle.inputs)
                return fail(static_cast<long long>(step) + 1, "input out of range");
            std::vector<int> before_bits;
            if (handle.kind == SchemeKind::flash) before_bits = handle.decode(state);

            auto next = handle.write(state, input);
            if (!next) {
                result.erased = true;
                return result;
            }
            if (next->size() != state.size())
                return fail(static_cast<long long>(step) + 1, "state changed shape");
            long long gained = 0;
            for (std::size_t c = 0; c < state.size(); ++c) {
                if ((*next)[c] < state[c])
                    return fail(static_cast<long long>(step) + 1,
                                "cell level decreased without erase");
                gained += (*next)[c] - state[c];
            }
            if (gained < 1)
                return fail(static_cast<long long>(step) + 1, "weight did not increase");

            std::vector<int> decoded = handle.decode(*next);
            if (handle.kind == SchemeKind::flash) {
                before_bits[input] ^= 1;
                if (decoded != before_bits)
                    return fail(static_cast<long long>(step) + 1,
                                "decoded bits differ from the requested flip");
            } else {
                history.push_back(input);
                if (decoded != window_oracle(history, static_cast<int>(decoded.size())))
                    return fail(static_cast<long long>(step) + 1,
                                "window differs from input history");
            }
            state = std::move(*next);
            result.steps_completed = static_cast<long long>(step) + 1;
        }
    } catch (const std::exception& e) {
        return fail(result.steps_completed + 1, e.what());
    }
    return result;
}

RandomSummary random_adversary(const SchemeHandle& handle, long long trials,
                               long long horizon, std::uint64_t seed) {
    if (trials < 0) throw ContractError("random_adversary: negative trial count");
    if (horizon < 1) throw ContractError("random_adversary: need a positive horizon");
    RandomSummary summary;
    summary.trials = trials;
    summary.horizon = horizon;
    if (trials == 0) return summary;  // nothing to run, all counters zero

    for (long long trial = 1; trial <= trials; ++trial) {
        // Raw modulo keeps the draw sequence identical across standard
        // libraries; the slight bias is irrelevant for adversarial coverage.
        std::mt19937_64 gen(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial)));
        std::vector<int> inputs(static_cast<std::size_t>(horizon));
        for (auto& v : inputs)
            v = static_cast<int>(gen() % static_cast<std::uint64_t>(handle.inputs));

        ConsistencyResult run = consistency_run(handle, inputs);
        if (!run.pass) {
            ++summary.violations;
            if (summary.first_failure_trial < 0) {
                summary.first_failure_trial = trial;
                summary.first_failure_reason = run.reason;
            }
        }
        if (run.erased) ++summary.erased_trials;
        long long w = run.steps_completed;
        if (trial == 1) {
            summary.min_writes = summary.max_writes = w;
        } else {
            summary.min_writes = std::min(summary.min_writes, w);
            summary.max_writes = std::max(summary.max_writes, w);
        }
        summary.total_writes += w;
    }
    summary.mean_writes =
        static_cast<double>(summary.total_writes) / static_cast<double>(trials);
    return summary;
}

std::vector<int> window_oracle(const std::vector<int>& inputs, int r) {
    if (r < 0) throw ContractError("window_oracle: negative window");
    std::vector<int> window(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r && i < static_cast<int>(inputs.size()); ++i)
        window[static_cast<std::size_t>(i)] = inputs[inputs.size() - 1 - static_cast<std::size_t>(i)];
    return window;
}

ReplayResult replay(const SchemeHandle& handle, const std::vector<int>& inputs) {
    ReplayResult result;
    result.state = handle.initial();
    for (int input : inputs) {
        auto next = handle.write(result.state, input);
        if (!next) {
            result.erased = true;
            return result;
        }
        result.state = std::move(*next);
        ++result.writes;
    }
    return result;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "conclusive=" << (report.conclusive ? "yes" : "no") << '\n';
    out << "writes=" << report.writes << '\n';
    out << "witness=" << traceio::join_csv(report.witness) << '\n';
    out << "states=" << report.states_explored << '\n';
    out << "wall_ms=" << report.wall_ms << '\n';
    return out.str();
}

std::string summary_text(const RandomSummary& summary) {
    std::ostringstream out;
    out << "trials=" << summary.trials << '\n';
    out << "horizon=" << summary.horizon << '\n';
    out << "min_writes=" << summary.min_writes << '\n';
    out << "max_writes=" << summary.max_writes << '\n';
    out << "total_writes=" << summary.total_writes << '\n';
    std::ostringstream mean;
    mean.setf(std::ios::fixed);
    mean.precision(2);
    mean << summary.mean_writes;
    out << "mean_writes=" << mean.str() << '\n';
    out << "erased_trials=" << summary.erased_trials << '\n';
    out << "violations=" << summary.violations << '\n';
    if (summary.first_failure_trial >= 0) {
        out << "first_failure_trial=" << summary.first_failure_trial << '\n';
        out << "first_failure_reason=" << summary.first_failure_reason << '\n';
    }
    return out.str();
}

}  // namespace flashcodes::verifier
