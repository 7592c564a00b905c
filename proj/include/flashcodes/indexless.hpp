#pragma once

#include <span>
#include <string>

#include "flashcodes/core.hpp"

namespace flashcodes::indexless {

// k bits in floor(n/k) blocks of k cells each. A block carries both one bit's
// identity (recoverable from the block's shape alone) and its value (the
// block's weight parity).
struct IndexlessConfig {
    int n = 4;
    int k = 2;
    int q = 2;
    int internal_k = 2;   // k, or k+1 when k odd and q even (last bit frozen 0)
    int block_count = 0;  // m = floor(n / internal_k)

    IndexlessConfig(int n_, int k_, int q_);
};

enum class BlockStatus { empty, active, full };

BlockStatus block_status(std::span<const int> block, int q);

// Bit index of an active block, recovered from the cyclic run of zero cells
// (or, in a block without zeros, from its unique non-full cell).
int read_index(std::span<const int> block, int q);

// Advance an active block by one write, preserving its index and flipping its
// parity.
void block_write(std::span<int> block, int q);

// Claim an empty block for bit i (sets cell i to 1).
void block_write_new(int i, std::span<int> block, int q);

InfoVector decode(const IndexlessConfig& cfg, const CellVector& x);
WriteOutcome encode(const IndexlessConfig& cfg, const CellVector& x, int bit);

// Deficiency ceiling (k-1)((k+1)(q-1) - 1); partition leftovers included.
long long deficiency_bound(long long k, long long q);

std::string serialize(const IndexlessConfig& cfg, const CellVector& x);
std::pair<IndexlessConfig, CellVector> parse(const std::string& text);

}  // namespace flashcodes::indexless
