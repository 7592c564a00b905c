#pragma once

#include <string>

#include "flashcodes/core.hpp"

namespace flashcodes::constrate {

// Larger alphabets appear as natural generalizations but only the binary
// construction is implemented; configs reject the rest.
enum class Alphabet { binary, ternary, quaternary };

// k bits in an index group of m blocks (each storing one write's bit index in
// binary) plus a parity group of k cells snapshotting the bits at each phase
// change. Phase p uses index levels p-1/p, so q-1 phases of m writes each.
struct ConstRateConfig {
    int n = 0;
    int k = 1;
    int q = 2;
    int index_block_cells = 1;  // ceil(log2(k+1)): bit indices stored one-based
    int block_count = 0;        // m = floor((n-k) / index_block_cells)

    ConstRateConfig(int n_, int k_, int q_, Alphabet alphabet = Alphabet::binary);
};

struct ConstRateState {
    CellVector index_group;   // first n-k cells
    CellVector parity_group;  // last k cells

    bool operator==(const ConstRateState&) const = default;
};

using ConstRateOutcome = WriteResult<ConstRateState>;

ConstRateState initial_state(const ConstRateConfig& cfg);

int current_phase(const ConstRateConfig& cfg, const ConstRateState& st);   // 1-based
int used_blocks(const ConstRateConfig& cfg, const ConstRateState& st);     // in current phase
long long writes_recorded(const ConstRateConfig& cfg, const ConstRateState& st);

InfoVector decode(const ConstRateConfig& cfg, const ConstRateState& st);
ConstRateOutcome encode(const ConstRateConfig& cfg, const ConstRateState& st, int bit);

// m(q-1): every adversary gets exactly this many writes.
long long guaranteed_writes(const ConstRateConfig& cfg);

std::string serialize(const ConstRateConfig& cfg, const ConstRateState& st);
std::pair<ConstRateConfig, ConstRateState> parse(const std::string& text);

}  // namespace flashcodes::constrate
